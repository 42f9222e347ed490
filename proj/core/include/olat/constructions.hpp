#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "olat/lattice.hpp"
#include "olat/morphisms.hpp"
#include "olat/ortho.hpp"

namespace olat {

inline constexpr int kDefaultSizeCap = 4096;

struct ConstructionError : std::runtime_error {
    enum class Kind {
        SizeLimitExceeded,
        PreconditionNotCertified,
        OrderMismatch,
        NotASublattice,
        GenerationTooLarge,
    };
    Kind kind;
    ConstructionError(Kind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

// Provenance of an amalgam element: shared L0 element, or an interior
// element of the left/right component.
enum class AmalgamSide { Shared, Left, Right };
struct AmalgamTag {
    AmalgamSide side;
    ElementId origin;
};

struct ConstructionResult {
    LatticePtr lattice;
    std::optional<Ortholattice> ortho;
    std::map<std::string, Embedding> embeddings;
    // Brute-force transitive closure of the component orders, kept for
    // cross-validation against the characterized order.
    std::optional<BitRel> oracle_order;
    std::vector<AmalgamTag> tags;
};

// Componentwise-ordered pairs; element (a, b) has id a*|B| + b.
ConstructionResult product(LatticePtr a, LatticePtr b, int size_cap = kDefaultSizeCap);

// Identify the bottoms and tops; interiors stay pairwise incomparable.
// Emits a Triangle-certified embedding "A" and a Sub01 embedding "B".
ConstructionResult horizontal_sum(LatticePtr a, LatticePtr b,
                                  int size_cap = kDefaultSizeCap);

// Amalgam of L1 and L2 over the shared L0, ordered by the three-case
// characterization; the transitive-closure oracle must agree exactly.
// left:  L0 into L1, Triangle-certified, with downward projections.
// right: L0 into L2, TriangleDual-certified, with upward projections.
// Emits Sub01 embeddings "L0", "L1", "L2" into the result.
ConstructionResult glued_union(const TriangleResult& left, const TriangleResult& right,
                               int size_cap = kDefaultSizeCap);

// Order-reversed copy of L1 glued to L0 along z -> perp(z). Element i of
// the result is iota(x_i); the embedding "L0" is TriangleDual-certified.
ConstructionResult dual_copy(const TriangleResult& left, const Ortholattice& o0,
                             int size_cap = kDefaultSizeCap);

// Glued union of L1 with its dual copy, carrying perp = iota. The result
// passes validate_ortho; "L0" is SubOrtho-certified, "L1" is Sub01.
ConstructionResult ortho_construction(const TriangleResult& left, const Ortholattice& o0,
                                      int size_cap = kDefaultSizeCap);

struct PowerWitness {
    LatticePtr sub;                              // S as a standalone lattice
    std::vector<ElementId> sub_elements;         // S's elements inside the base
    LatticePtr power;                            // S^n, built by iterated squaring
    std::vector<std::vector<ElementId>> tuples;  // power element -> S-tuple
    LatticePtr ambient;                          // horizontal sum of base and S^n
    Embedding power_into_ambient;                // Sub01-certified
    Embedding base_into_ambient;                 // Triangle-certified
    std::optional<std::vector<ElementId>> ambient_perp;  // when base carries perp
    int arity = 1;
    std::map<std::vector<ElementId>, ElementId> tuple_index;

    ElementId tuple_id(const std::vector<ElementId>& sub_tuple) const {
        return tuple_index.at(sub_tuple);
    }
};

// Realizes S^n inside an extension of the base lattice. S must be a
// {0,1}-sublattice of the base (and perp-closed when perp is given).
PowerWitness power_witness(LatticePtr base, std::vector<ElementId> sub_elements,
                           int arity,
                           const std::vector<ElementId>* base_perp = nullptr,
                           int size_cap = kDefaultSizeCap);

// Colimit of a finite chain of Sub01 embeddings: the final lattice with
// the composed embedding "L0" (Triangle-certified when every step is).
ConstructionResult chain_union(const std::vector<Embedding>& tower);

}  // namespace olat
