#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "olat/interpolation.hpp"
#include "olat/lattice.hpp"
#include "olat/morphisms.hpp"
#include "olat/ortho.hpp"
#include "olat/terms.hpp"

namespace olat {

using json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lattice document: {"elements": [...], "covers": [[i,j]...],
// "bottom": i, "top": j}; "leq" with explicit pairs is accepted instead
// of "covers". Ortholattices add "perp": [image indices].
json lattice_to_json(const FiniteLattice& l);
FiniteLattice lattice_from_json(const json& doc);
Poset poset_from_json(const json& doc);  // no lattice validation
json ortho_to_json(const Ortholattice& o);
Ortholattice ortho_from_json(const json& doc);

// Embedding document: {"source": <doc|"zoo:Name">, "target": ..., "map": [...]}.
json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const json& doc);

json term_to_json(const TermPtr& t);
TermPtr term_from_json(const json& doc);

json function_to_json(const FunctionTable& f);
FunctionTable function_from_json(const json& doc, LatticePtr domain);

// CLI literal syntax "x:y,..." over element names; n-ary keys are
// parenthesized tuples "(a,b):c".
FunctionTable parse_function_literal(LatticePtr domain, const std::string& text);

// Deterministic DOT: nodes sorted by (height, name), one edge per cover,
// ranks by height; perp drawn as dashed undirected edges when given.
std::string export_dot(const FiniteLattice& l,
                       const std::vector<ElementId>* perp = nullptr);

// "zoo:Name" or plain zoo name, otherwise a file path.
LatticePtr resolve_lattice(const std::string& spec);
Ortholattice resolve_ortho(const std::string& spec);

struct WorkspaceEmbedding {
    std::string source, target;  // names of workspace lattices
    std::vector<ElementId> map;
};

struct WorkspaceFunction {
    std::string domain;
    int arity = 1;
    std::map<std::vector<ElementId>, ElementId> entries;
};

// Named document bundle; loading then saving canonical input is
// byte-stable.
struct Workspace {
    std::map<std::string, FiniteLattice> lattices;
    std::map<std::string, Ortholattice> ortholattices;
    std::map<std::string, WorkspaceEmbedding> embeddings;
    std::map<std::string, WorkspaceFunction> functions;
    std::map<std::string, TermPtr> terms;
};

json workspace_to_json(const Workspace& w);
Workspace workspace_from_json(const json& doc);

}  // namespace olat
