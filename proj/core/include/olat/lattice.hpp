#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "olat/bitrel.hpp"

namespace olat {

using ElementId = int;

// A finite poset given by a reflexive-transitive relation matrix.
// Input to lattice validation and to Dedekind-MacNeille completion.
struct Poset {
    std::vector<std::string> names;
    BitRel leq;
    std::optional<ElementId> bottom;
    std::optional<ElementId> top;

    int size() const { return static_cast<int>(names.size()); }

    // Covers are transitively (and reflexively) closed.
    static Poset from_covers(std::vector<std::string> names,
                             const std::vector<std::pair<int, int>>& covers);
    static Poset from_relation(std::vector<std::string> names, BitRel relation);
};

struct LatticeError {
    enum class Kind { NotAPartialOrder, NoMeet, NoJoin, MissingBounds };
    Kind kind;
    ElementId x = -1;
    ElementId y = -1;
    std::string message;
};

// A validated finite bounded lattice: dense order matrix plus cached
// meet/join tables. Immutable after construction; all queries are pure.
class FiniteLattice {
public:
    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(ElementId x) const { return names_[x]; }
    const std::vector<std::string>& names() const { return names_; }

    bool leq(ElementId x, ElementId y) const { return leq_.get(x, y); }
    ElementId bottom() const { return bottom_; }
    ElementId top() const { return top_; }

    ElementId meet(ElementId x, ElementId y) const { return meet_[idx(x, y)]; }
    ElementId join(ElementId x, ElementId y) const { return join_[idx(x, y)]; }

    // sup(empty) = bottom, inf(empty) = top.
    ElementId sup(std::span<const ElementId> subset) const;
    ElementId inf(std::span<const ElementId> subset) const;

    FiniteLattice dual() const;

    // Cover pairs (x, y) with x < y and nothing strictly between; sorted.
    std::vector<std::pair<ElementId, ElementId>> covers() const;
    // Longest-chain height of each element above bottom.
    std::vector<int> heights() const;

    Poset as_poset() const;
    const BitRel& order() const { return leq_; }

    friend std::variant<FiniteLattice, LatticeError> validate_lattice(const Poset&);

private:
    FiniteLattice() = default;
    std::size_t idx(ElementId x, ElementId y) const {
        return static_cast<std::size_t>(x) * names_.size() + y;
    }

    std::vector<std::string> names_;
    BitRel leq_;
    ElementId bottom_ = -1;
    ElementId top_ = -1;
    std::vector<ElementId> meet_;
    std::vector<ElementId> join_;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;
using LatticeResult = std::variant<FiniteLattice, LatticeError>;

// Checks the partial-order axioms, bounds and meet/join totality;
// on success returns the lattice with meet/join tables cached.
LatticeResult validate_lattice(const Poset& candidate);

// Convenience: validate or throw std::invalid_argument with the diagnostic.
FiniteLattice require_lattice(const Poset& candidate);
LatticePtr make_lattice(const Poset& candidate);

std::string describe(const LatticeError& e);

struct DmCompletion {
    FiniteLattice lattice;
    // Poset element -> completion element (the cut (down(x), up(x))).
    std::vector<ElementId> embed;
};

// Lattice of cuts of a finite poset. The embedding preserves all
// existing meets and joins; for lattice inputs it is a bijection.
DmCompletion dm_completion(const Poset& p);

}  // namespace olat
