#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "olat/constructions.hpp"
#include "olat/lattice.hpp"
#include "olat/morphisms.hpp"
#include "olat/ortho.hpp"
#include "olat/terms.hpp"

namespace olat {

inline constexpr long kDefaultCloneBudget = 2'000'000;

// Extensional (partial) function on lattice elements.
struct FunctionTable {
    int arity = 1;
    LatticePtr domain;
    std::map<std::vector<ElementId>, ElementId> entries;

    static FunctionTable total_unary(LatticePtr l, std::vector<ElementId> values);
    static FunctionTable partial_unary(
        LatticePtr l, const std::vector<std::pair<ElementId, ElementId>>& pairs);

    bool total_on(const FiniteLattice& l) const;
    std::optional<ElementId> at(ElementId x) const;  // unary lookup
};

struct MonotoneReport {
    bool monotone = true;
    std::optional<std::pair<std::vector<ElementId>, std::vector<ElementId>>> witness;
};

MonotoneReport monotone_check(const FunctionTable& f);

enum class CloneMode { LatticeOnly, Ortho };

struct CloneMember {
    std::vector<ElementId> table;  // element -> element
    TermPtr witness;               // shortest found, BFS by term size
};

// Unary polynomial functions: closure of {identity, constants} under
// pointwise meet and join (and perp postcomposition in Ortho mode).
struct CloneTable {
    LatticePtr lattice;
    std::optional<std::vector<ElementId>> perp;
    CloneMode mode = CloneMode::LatticeOnly;
    CoeffBinding coeffs;
    std::vector<CloneMember> members;  // discovery order
    std::map<std::vector<ElementId>, std::size_t> index;
    bool complete = true;  // false when truncated by budget or early stop

    const CloneMember* find(const std::vector<ElementId>& table) const;
};

CloneTable polynomial_clone(LatticePtr lattice, const std::vector<ElementId>* perp,
                            CloneMode mode, long budget = kDefaultCloneBudget);

struct InterpolationResult {
    enum class Status { Witness, NotRepresentable, Unknown };
    Status status = Status::Unknown;
    TermPtr term;
    CoeffBinding coeffs;
    std::vector<ElementId> table;
};

// Tri-state: a witness, a definitive negative (closure completed), or
// Unknown when the budget truncated the closure.
InterpolationResult interpolate_unary(LatticePtr lattice,
                                      const std::vector<ElementId>* perp,
                                      CloneMode mode, const FunctionTable& f,
                                      long budget = kDefaultCloneBudget);

// Shared closure pass matching several partial functions at once.
std::vector<InterpolationResult> interpolate_many(
    LatticePtr lattice, const std::vector<ElementId>* perp, CloneMode mode,
    std::span<const FunctionTable> fns, long budget = kDefaultCloneBudget);

// The horizontal-sum lift: L0' with the diagonal antichain and the
// partial functions interpolated by the extension step.
struct AntichainLift {
    LatticePtr prod;     // L0 x L0
    LatticePtr lprime;   // horizontal sum of L0 and L0 x L0
    Embedding base_embed;  // L0 -> L0', Triangle-certified
    Embedding prod_embed;  // L0 x L0 -> L0', Sub01-certified
    FunctionTable fbar, g1, g2;      // partial on L0'
    std::vector<ElementId> antichain;  // diagonal pairs, ids in L0'
};

AntichainLift antichain_lift(const Ortholattice& o0, const FunctionTable& f,
                             int size_cap = kDefaultSizeCap);

struct ExtensionSource {
    // Supplied extension: L1 with a Triangle-certified embedding of L0'.
    std::optional<std::pair<LatticePtr, Embedding>> supplied;
    // Bounded search: iterated horizontal sums with L0 x L0.
    int search_steps = 2;
    int size_cap = kDefaultSizeCap;
};

struct PipelineStage {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct PipelineTrace {
    enum class Status { Success, ToldStepFailed, StageFailed };
    Status status = Status::StageFailed;
    std::string failure;

    LatticePtr lprime;     // L0'
    LatticePtr extension;  // L1
    std::optional<Ortholattice> result;  // L
    Embedding base_into_result;          // L0 -> L, SubOrtho-certified

    TermPtr p, q1, q2, h;
    CoeffBinding h_coeffs;  // coefficients of h, living in L
    bool verified = false;  // h(x) = f(x) confirmed on all of dom(f)
    std::vector<PipelineStage> stages;
};

// The full extension pipeline h(x) = p(q1(x) v q2(x-perp)). Sound but
// not complete: failures report ToldStepFailed rather than guessing.
PipelineTrace extend_pipeline(const Ortholattice& o0, const FunctionTable& f,
                              const ExtensionSource& source,
                              long budget = kDefaultCloneBudget);

struct NaryResult {
    enum class Status { Witness, Unknown };
    Status status = Status::Unknown;
    TermPtr term;
    CoeffBinding coeffs;
    LatticePtr ambient;
    Embedding base_into_ambient;
    bool verified = false;
    std::string detail;
};

// n-ary to unary reduction over a constructed power witness.
NaryResult nary_reduce(LatticePtr base, const std::vector<ElementId>* base_perp,
                       CloneMode mode, const FunctionTable& g,
                       long budget = kDefaultCloneBudget,
                       int size_cap = kDefaultSizeCap, int generation_cap = 64);

struct CoverageEntry {
    bool covered = false;
    TermPtr term;
    CoeffBinding coeffs;  // valid in the final lattice
    bool verified = false;
};

struct CoverageReport {
    std::vector<CoverageEntry> entries;
    std::optional<Ortholattice> final_lattice;
    Embedding base_into_final;
    int final_size = 0;
};

// Finite analogue of the iterated construction: each target is first
// tried against the current lattice's clone, then via the pipeline with
// the current lattice as base.
CoverageReport iterate_cover(const Ortholattice& o0,
                             std::span<const FunctionTable> targets,
                             long step_budget = kDefaultCloneBudget,
                             int size_cap = kDefaultSizeCap);

}  // namespace olat
