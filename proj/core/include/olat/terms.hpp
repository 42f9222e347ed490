#pragma once

#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "olat/morphisms.hpp"
#include "olat/ortho.hpp"

namespace olat {

enum class TermKind { Var, Coeff, Meet, Join, Perp };

// Immutable orthopolynomial AST. Coefficients are symbolic references
// resolved at evaluation time, so a term written over one lattice can be
// evaluated in an extension by transporting its binding.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    TermKind kind;
    int var = -1;        // Var
    std::string coeff;   // Coeff
    TermPtr lhs, rhs;    // Meet/Join; Perp uses lhs only
};

TermPtr tvar(int index);
TermPtr tcoeff(std::string name);
TermPtr tmeet(TermPtr a, TermPtr b);
TermPtr tjoin(TermPtr a, TermPtr b);
TermPtr tperp(TermPtr a);

int term_size(const TermPtr& t);
int perp_count(const TermPtr& t);
int term_arity(const TermPtr& t);  // 1 + max variable index, 0 if none
bool term_equal(const TermPtr& a, const TermPtr& b);
std::size_t term_hash(const TermPtr& t);

struct TermError : std::runtime_error {
    enum class Kind { UnboundVariable, UnresolvedCoefficient, PerpUnavailable, NotUnary };
    Kind kind;
    TermError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct TermParseError : std::runtime_error {
    std::size_t position;
    TermParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
};

using CoeffBinding = std::map<std::string, ElementId>;

struct EvalContext {
    const FiniteLattice* lattice = nullptr;
    const std::vector<ElementId>* perp = nullptr;  // absent in lattice-only use
    const CoeffBinding* coeffs = nullptr;
};

EvalContext eval_context(const FiniteLattice& l, const CoeffBinding& coeffs);
EvalContext eval_context(const Ortholattice& o, const CoeffBinding& coeffs);

ElementId eval(const TermPtr& t, const EvalContext& ctx,
               std::span<const ElementId> assignment);

// Canonical coefficient names for a lattice: the element name when it is
// unambiguous, "#<id>" otherwise.
CoeffBinding coeff_binding_for(const FiniteLattice& l);
std::string coeff_name_for(const FiniteLattice& l, ElementId x);

// Push coefficient values forward along an embedding.
CoeffBinding transport(const CoeffBinding& binding, const Embedding& e);

// De Morgan normal form: Perp only directly above Var or Coeff.
TermPtr nnf(const TermPtr& t);
bool is_nnf(const TermPtr& t);

struct TwoVarTerm {
    TermPtr term;  // lattice term in x0 and x1, Perp-free
    // Fresh coefficient names standing for the perp of existing ones.
    std::vector<std::pair<std::string, std::string>> perp_coeffs;
};

// Rewrites a unary NNF term into a lattice polynomial p'(x, y) with
// y standing for x-perp; substituting y := x-perp recovers the input.
TwoVarTerm as_two_variable_lattice_term(const TermPtr& t);

CoeffBinding extend_binding_with_perps(
    CoeffBinding binding,
    const std::vector<std::pair<std::string, std::string>>& perp_coeffs,
    const Ortholattice& o);

// Replace variable i by replacements[i].
TermPtr subst_vars(const TermPtr& t, std::span<const TermPtr> replacements);

std::string print_term(const TermPtr& t);
TermPtr parse_term(const std::string& text);

}  // namespace olat
