#pragma once

#include <random>
#include <vector>

#include "olat/constructions.hpp"
#include "olat/lattice.hpp"
#include "olat/morphisms.hpp"
#include "olat/ortho.hpp"

namespace fixtures {

using namespace olat;

inline LatticePtr zoo_lattice(const std::string& name) {
    return std::make_shared<const FiniteLattice>(zoo::lattice(name));
}

// 4-element poset with two maximal and two minimal elements and full
// cross order; glbs of the maximal pair do not exist.
inline Poset bowtie() {
    std::vector<std::pair<int, int>> covers = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    return Poset::from_covers({"p", "q", "r", "s"}, covers);
}

inline Poset bowtie_with_bounds() {
    std::vector<std::pair<int, int>> covers = {{4, 0}, {4, 1}, {0, 2}, {0, 3},
                                               {1, 2}, {1, 3}, {2, 5}, {3, 5}};
    Poset p = Poset::from_covers({"p", "q", "r", "s", "0", "1"}, covers);
    p.bottom = 4;
    p.top = 5;
    return p;
}

// Random small lattice from a generator pool, for randomized instances.
inline LatticePtr random_small_lattice(std::mt19937& rng) {
    static const char* pool[] = {"chain2", "chain3", "chain4", "M2", "M3", "N5"};
    return zoo_lattice(pool[rng() % 6]);
}

// A certified L0-strong-extension L1 built by (possibly iterated)
// horizontal sums with random small lattices.
inline TriangleResult random_extension(const Ortholattice& o0, std::mt19937& rng,
                                       int max_size) {
    LatticePtr cur = o0.lattice;
    Embedding emb = require_triangle(identity_embedding(cur)).embedding;
    int steps = static_cast<int>(rng() % 3);
    for (int i = 0; i < steps; ++i) {
        LatticePtr extra = random_small_lattice(rng);
        if (cur->size() + extra->size() - 2 > max_size) break;
        ConstructionResult hs = horizontal_sum(cur, extra, max_size);
        emb = compose(emb, hs.embeddings.at("A"));
        cur = hs.lattice;
    }
    return require_triangle(std::move(emb));
}

inline Ortholattice random_small_ortho(std::mt19937& rng) {
    static const char* pool[] = {"chain2", "B2", "MO2", "O6"};
    return zoo::ortho(pool[rng() % 4]);
}

// Enumerate all subsets of {0..n-1} as element vectors (n <= 20).
inline std::vector<std::vector<ElementId>> all_subsets(int n) {
    std::vector<std::vector<ElementId>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<ElementId> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace fixtures
