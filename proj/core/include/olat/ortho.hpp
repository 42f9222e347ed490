#pragma once

#include <string>
#include <variant>
#include <vector>

#include "olat/lattice.hpp"

namespace olat {

// A finite lattice with an orthocomplement involution table.
struct Ortholattice {
    LatticePtr lattice;
    std::vector<ElementId> perp;

    int size() const { return lattice->size(); }
    ElementId orth(ElementId x) const { return perp[x]; }
};

struct OrthoError {
    enum class Kind { NotInvolution, NotOrderReversing, ComplementLawFails };
    Kind kind;
    ElementId x = -1;
    ElementId y = -1;
    std::string message;
};

using OrthoResult = std::variant<Ortholattice, OrthoError>;

// Checks involution, order reversal and the complement laws exhaustively;
// the first failure is reported with a witness.
OrthoResult validate_ortho(LatticePtr lattice, std::vector<ElementId> perp);
Ortholattice require_ortho(LatticePtr lattice, std::vector<ElementId> perp);

std::string describe(const OrthoError& e);

struct DeMorganReport {
    bool ok = true;
    ElementId x = -1;
    ElementId y = -1;
};

// De Morgan is derivable from the axioms; this is a regression check on
// table construction and must always pass on validated inputs.
DeMorganReport check_de_morgan(const Ortholattice& o);

namespace zoo {

std::vector<std::string> lattice_names();
std::vector<std::string> ortho_names();

// Plain lattices: "chain2".."chain5", "M2", "M3", "N5", "bowtie" is not
// here (it is not a lattice).
FiniteLattice lattice(const std::string& name);

// Ortholattices: "chain2", "B2", "B3", "MO2", "O6". All validated.
Ortholattice ortho(const std::string& name);

}  // namespace zoo

}  // namespace olat
