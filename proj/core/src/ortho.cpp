#include "olat/ortho.hpp"

#include <stdexcept>

namespace olat {

std::string describe(const OrthoError& e) {
    switch (e.kind) {
        case OrthoError::Kind::NotInvolution:
            return "NotInvolution: " + e.message;
        case OrthoError::Kind::NotOrderReversing:
            return "NotOrderReversing: " + e.message;
        case OrthoError::Kind::ComplementLawFails:
            return "ComplementLawFails: " + e.message;
    }
    return "unknown error";
}

OrthoResult validate_ortho(LatticePtr lattice, std::vector<ElementId> perp) {
    using K = OrthoError::Kind;
    const auto& L = *lattice;
    const int n = L.size();
    if (static_cast<int>(perp.size()) != n)
        return OrthoError{K::NotInvolution, -1, -1, "perp table has wrong size"};
    for (ElementId x = 0; x < n; ++x) {
        if (perp[x] < 0 || perp[x] >= n || perp[perp[x]] != x)
            return OrthoError{K::NotInvolution, x, -1,
                              "perp(perp(" + L.name(x) + ")) != " + L.name(x)};
    }
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            if (L.leq(x, y) && !L.leq(perp[y], perp[x]))
                return OrthoError{K::NotOrderReversing, x, y,
                                  "perp does not reverse " + L.name(x) + " <= " +
                                      L.name(y)};
        }
    for (ElementId x = 0; x < n; ++x) {
        if (L.join(x, perp[x]) != L.top() || L.meet(x, perp[x]) != L.bottom())
            return OrthoError{K::ComplementLawFails, x, -1,
                              "complement laws fail at " + L.name(x)};
    }
    return Ortholattice{std::move(lattice), std::move(perp)};
}

Ortholattice require_ortho(LatticePtr lattice, std::vector<ElementId> perp) {
    auto res = validate_ortho(std::move(lattice), std::move(perp));
    if (auto* err = std::get_if<OrthoError>(&res))
        throw std::invalid_argument(describe(*err));
    return std::get<Ortholattice>(std::move(res));
}

DeMorganReport check_de_morgan(const Ortholattice& o) {
    const auto& L = *o.lattice;
    const int n = L.size();
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            if (o.perp[L.join(x, y)] != L.meet(o.perp[x], o.perp[y]))
                return DeMorganReport{false, x, y};
            if (o.perp[L.meet(x, y)] != L.join(o.perp[x], o.perp[y]))
                return DeMorganReport{false, x, y};
        }
    return DeMorganReport{};
}

namespace zoo {

namespace {

FiniteLattice chain(int k) {
    std::vector<std::string> names;
    names.push_back("0");
    static const char* mids[] = {"a", "b", "c", "d", "e"};
    if (k == 3) {
        names.push_back("m");
    } else {
        for (int i = 0; i < k - 2; ++i) names.emplace_back(mids[i]);
    }
    names.push_back("1");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
    return require_lattice(Poset::from_covers(std::move(names), covers));
}

FiniteLattice antichain_plus_bounds(std::vector<std::string> atoms) {
    // 0 below each atom below 1, atoms pairwise incomparable.
    std::vector<std::string> names;
    names.push_back("0");
    for (auto& a : atoms) names.push_back(std::move(a));
    names.push_back("1");
    const int n = static_cast<int>(names.size());
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i + 1 < n; ++i) {
        covers.emplace_back(0, i);
        covers.emplace_back(i, n - 1);
    }
    return require_lattice(Poset::from_covers(std::move(names), covers));
}

FiniteLattice boolean_cube() {
    std::vector<std::string> names = {"0", "x", "y", "z", "xy", "xz", "yz", "1"};
    std::vector<std::pair<int, int>> covers;
    // Elements are bitmasks 0..7 in the order above.
    auto mask = [](int i) {
        static const int m[] = {0, 1, 2, 4, 3, 5, 6, 7};
        return m[i];
    };
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int a = mask(i), b = mask(j);
            if (a != b && (a & b) == a && __builtin_popcount(b) == __builtin_popcount(a) + 1)
                covers.emplace_back(i, j);
        }
    return require_lattice(Poset::from_covers(std::move(names), covers));
}

FiniteLattice n5() {
    std::vector<std::string> names = {"0", "a", "c", "b", "1"};
    std::vector<std::pair<int, int>> covers = {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
    return require_lattice(Poset::from_covers(std::move(names), covers));
}

FiniteLattice hexagon() {
    // 0 < a < b < 1 and 0 < b' < a' < 1, the two chains incomparable.
    std::vector<std::string> names = {"0", "a", "b", "b'", "a'", "1"};
    std::vector<std::pair<int, int>> covers = {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}};
    return require_lattice(Poset::from_covers(std::move(names), covers));
}

}  // namespace

std::vector<std::string> lattice_names() {
    return {"chain2", "chain3", "chain4", "chain5", "M2", "M3", "N5", "O6-lattice"};
}

std::vector<std::string> ortho_names() {
    return {"chain2", "B2", "B3", "MO2", "O6"};
}

FiniteLattice lattice(const std::string& name) {
    if (name == "chain2") return chain(2);
    if (name == "chain3") return chain(3);
    if (name == "chain4") return chain(4);
    if (name == "chain5") return chain(5);
    if (name == "M2") return antichain_plus_bounds({"a", "b"});
    if (name == "M3") return antichain_plus_bounds({"a", "b", "c"});
    if (name == "N5") return n5();
    if (name == "O6-lattice") return hexagon();
    throw std::invalid_argument("unknown zoo lattice: " + name);
}

Ortholattice ortho(const std::string& name) {
    if (name == "chain2") {
        auto L = std::make_shared<const FiniteLattice>(chain(2));
        return require_ortho(L, {1, 0});
    }
    if (name == "B2") {
        auto L = std::make_shared<const FiniteLattice>(antichain_plus_bounds({"a", "b"}));
        return require_ortho(L, {3, 2, 1, 0});
    }
    if (name == "B3") {
        auto L = std::make_shared<const FiniteLattice>(boolean_cube());
        // complement of the bitmask: 0<->1, x<->yz, y<->xz, z<->xy
        return require_ortho(L, {7, 6, 5, 4, 3, 2, 1, 0});
    }
    if (name == "MO2") {
        auto L = std::make_shared<const FiniteLattice>(
            antichain_plus_bounds({"a", "a'", "b", "b'"}));
        return require_ortho(L, {5, 2, 1, 4, 3, 0});
    }
    if (name == "O6") {
        auto L = std::make_shared<const FiniteLattice>(hexagon());
        // names: 0 a b b' a' 1
        return require_ortho(L, {5, 4, 3, 2, 1, 0});
    }
    throw std::invalid_argument("unknown zoo ortholattice: " + name);
}

}  // namespace zoo

}  // namespace olat
