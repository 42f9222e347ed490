#include "olat/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace olat {

Poset Poset::from_covers(std::vector<std::string> names,
                         const std::vector<std::pair<int, int>>& covers) {
    const int n = static_cast<int>(names.size());
    BitRel rel(n);
    for (auto [lo, hi] : covers) rel.set(lo, hi);
    rel.reflexive_close();
    rel.transitive_close();
    return Poset{std::move(names), std::move(rel), std::nullopt, std::nullopt};
}

Poset Poset::from_relation(std::vector<std::string> names, BitRel relation) {
    return Poset{std::move(names), std::move(relation), std::nullopt, std::nullopt};
}

std::string describe(const LatticeError& e) {
    switch (e.kind) {
        case LatticeError::Kind::NotAPartialOrder:
            return "NotAPartialOrder: " + e.message;
        case LatticeError::Kind::NoMeet:
            return "NoMeet: " + e.message;
        case LatticeError::Kind::NoJoin:
            return "NoJoin: " + e.message;
        case LatticeError::Kind::MissingBounds:
            return "MissingBounds: " + e.message;
    }
    return "unknown error";
}

namespace {

// Greatest element of {z : z <= x and z <= y}, or -1 if there is none.
ElementId greatest_common_lower(const BitRel& leq, int n, ElementId x, ElementId y) {
    ElementId best = -1;
    for (ElementId z = 0; z < n; ++z) {
        if (!leq.get(z, x) || !leq.get(z, y)) continue;
        if (best == -1 || leq.get(best, z)) best = z;
    }
    if (best == -1) return -1;
    for (ElementId z = 0; z < n; ++z) {
        if (leq.get(z, x) && leq.get(z, y) && !leq.get(z, best)) return -1;
    }
    return best;
}

ElementId least_common_upper(const BitRel& leq, int n, ElementId x, ElementId y) {
    ElementId best = -1;
    for (ElementId z = 0; z < n; ++z) {
        if (!leq.get(x, z) || !leq.get(y, z)) continue;
        if (best == -1 || leq.get(z, best)) best = z;
    }
    if (best == -1) return -1;
    for (ElementId z = 0; z < n; ++z) {
        if (leq.get(x, z) && leq.get(y, z) && !leq.get(best, z)) return -1;
    }
    return best;
}

std::optional<LatticeError> check_partial_order(const Poset& p) {
    const int n = p.size();
    const auto& leq = p.leq;
    using K = LatticeError::Kind;
    for (int i = 0; i < n; ++i) {
        if (!leq.get(i, i))
            return LatticeError{K::NotAPartialOrder, i, i,
                                "relation not reflexive at " + p.names[i]};
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && leq.get(i, j) && leq.get(j, i))
                return LatticeError{K::NotAPartialOrder, i, j,
                                    "antisymmetry fails at (" + p.names[i] + ", " +
                                        p.names[j] + ")"};
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!leq.get(i, j)) continue;
            for (int k = 0; k < n; ++k) {
                if (leq.get(j, k) && !leq.get(i, k))
                    return LatticeError{K::NotAPartialOrder, i, k,
                                        "transitivity fails via " + p.names[j]};
            }
        }
    return std::nullopt;
}

}  // namespace

LatticeResult validate_lattice(const Poset& candidate) {
    using K = LatticeError::Kind;
    const int n = candidate.size();
    if (n == 0)
        return LatticeError{K::MissingBounds, -1, -1, "empty element set"};
    if (auto err = check_partial_order(candidate)) return *err;

    const auto& leq = candidate.leq;

    // Bounds: use the declared ones, otherwise derive the unique extrema.
    ElementId bottom = candidate.bottom.value_or(-1);
    ElementId top = candidate.top.value_or(-1);
    if (bottom == -1) {
        for (ElementId x = 0; x < n; ++x) {
            bool least = true;
            for (ElementId y = 0; y < n; ++y) least &= leq.get(x, y);
            if (least) { bottom = x; break; }
        }
    }
    if (top == -1) {
        for (ElementId x = 0; x < n; ++x) {
            bool greatest = true;
            for (ElementId y = 0; y < n; ++y) greatest &= leq.get(y, x);
            if (greatest) { top = x; break; }
        }
    }
    if (bottom == -1 || top == -1)
        return LatticeError{K::MissingBounds, bottom, top,
                            "no least/greatest element"};
    for (ElementId x = 0; x < n; ++x) {
        if (!leq.get(bottom, x))
            return LatticeError{K::MissingBounds, bottom, x,
                                "declared bottom not below " + candidate.names[x]};
        if (!leq.get(x, top))
            return LatticeError{K::MissingBounds, x, top,
                                "declared top not above " + candidate.names[x]};
    }

    FiniteLattice L;
    L.names_ = candidate.names;
    L.leq_ = leq;
    L.bottom_ = bottom;
    L.top_ = top;
    L.meet_.assign(static_cast<std::size_t>(n) * n, -1);
    L.join_.assign(static_cast<std::size_t>(n) * n, -1);
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            ElementId m = greatest_common_lower(leq, n, x, y);
            if (m == -1)
                return LatticeError{K::NoMeet, x, y,
                                    "no greatest lower bound of (" + candidate.names[x] +
                                        ", " + candidate.names[y] + ")"};
            ElementId j = least_common_upper(leq, n, x, y);
            if (j == -1)
                return LatticeError{K::NoJoin, x, y,
                                    "no least upper bound of (" + candidate.names[x] +
                                        ", " + candidate.names[y] + ")"};
            L.meet_[static_cast<std::size_t>(x) * n + y] = m;
            L.join_[static_cast<std::size_t>(x) * n + y] = j;
        }
    return L;
}

FiniteLattice require_lattice(const Poset& candidate) {
    auto res = validate_lattice(candidate);
    if (auto* err = std::get_if<LatticeError>(&res))
        throw std::invalid_argument(describe(*err));
    return std::get<FiniteLattice>(std::move(res));
}

LatticePtr make_lattice(const Poset& candidate) {
    return std::make_shared<const FiniteLattice>(require_lattice(candidate));
}

ElementId FiniteLattice::sup(std::span<const ElementId> subset) const {
    ElementId acc = bottom_;
    for (ElementId x : subset) acc = join(acc, x);
    return acc;
}

ElementId FiniteLattice::inf(std::span<const ElementId> subset) const {
    ElementId acc = top_;
    for (ElementId x : subset) acc = meet(acc, x);
    return acc;
}

FiniteLattice FiniteLattice::dual() const {
    const int n = size();
    FiniteLattice d;
    d.names_ = names_;
    d.leq_ = BitRel(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq_.get(j, i)) d.leq_.set(i, j);
    d.bottom_ = top_;
    d.top_ = bottom_;
    d.meet_ = join_;
    d.join_ = meet_;
    return d;
}

std::vector<std::pair<ElementId, ElementId>> FiniteLattice::covers() const {
    const int n = size();
    std::vector<std::pair<ElementId, ElementId>> out;
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            if (x == y || !leq_.get(x, y)) continue;
            bool cover = true;
            for (ElementId z = 0; z < n && cover; ++z)
                if (z != x && z != y && leq_.get(x, z) && leq_.get(z, y)) cover = false;
            if (cover) out.emplace_back(x, y);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> FiniteLattice::heights() const {
    const int n = size();
    // Elements sorted by size of their down-set give a linear extension.
    std::vector<ElementId> order(n);
    std::vector<int> below(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (leq_.get(y, x)) ++below[x];
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return below[a] < below[b]; });
    std::vector<int> h(n, 0);
    for (ElementId x : order)
        for (ElementId y = 0; y < n; ++y)
            if (y != x && leq_.get(y, x)) h[x] = std::max(h[x], h[y] + 1);
    return h;
}

Poset FiniteLattice::as_poset() const {
    return Poset{names_, leq_, bottom_, top_};
}

DmCompletion dm_completion(const Poset& p) {
    const int n = p.size();
    using Set = std::vector<char>;

    // Cuts are exactly the intersections of principal down-sets, plus the
    // whole poset; close under pairwise intersection to fixpoint.
    std::set<Set> cuts;
    cuts.insert(Set(n, 1));
    for (int b = 0; b < n; ++b) {
        Set down(n, 0);
        for (int x = 0; x < n; ++x) down[x] = p.leq.get(x, b) ? 1 : 0;
        cuts.insert(down);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Set> cur(cuts.begin(), cuts.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                Set meet(n);
                for (int x = 0; x < n; ++x) meet[x] = cur[i][x] & cur[j][x];
                grew |= cuts.insert(std::move(meet)).second;
            }
    }

    std::vector<Set> elems(cuts.begin(), cuts.end());
    std::sort(elems.begin(), elems.end(), [](const Set& a, const Set& b) {
        int ca = static_cast<int>(std::count(a.begin(), a.end(), 1));
        int cb = static_cast<int>(std::count(b.begin(), b.end(), 1));
        if (ca != cb) return ca < cb;
        return a < b;
    });

    const int m = static_cast<int>(elems.size());
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) {
        // A down-set is determined by its maximal elements; a singleton
        // maximum keeps the original name.
        std::vector<int> maximal;
        for (int x = 0; x < n; ++x) {
            if (!elems[i][x]) continue;
            bool is_max = true;
            for (int y = 0; y < n && is_max; ++y)
                if (y != x && elems[i][y] && p.leq.get(x, y)) is_max = false;
            if (is_max) maximal.push_back(x);
        }
        if (maximal.size() == 1) {
            names[i] = p.names[maximal[0]];
        } else {
            std::string s = "{";
            for (std::size_t k = 0; k < maximal.size(); ++k) {
                if (k) s += ",";
                s += p.names[maximal[k]];
            }
            s += "}";
            names[i] = s;
        }
    }

    BitRel rel(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            bool subset = true;
            for (int x = 0; x < n && subset; ++x)
                if (elems[i][x] && !elems[j][x]) subset = false;
            if (subset) rel.set(i, j);
        }

    Poset cp = Poset::from_relation(std::move(names), std::move(rel));
    FiniteLattice lat = require_lattice(cp);

    std::map<Set, ElementId> index;
    for (int i = 0; i < m; ++i) index[elems[i]] = i;
    std::vector<ElementId> embed(n);
    for (int x = 0; x < n; ++x) {
        Set down(n, 0);
        for (int y = 0; y < n; ++y) down[y] = p.leq.get(y, x) ? 1 : 0;
        embed[x] = index.at(down);
    }
    return DmCompletion{std::move(lat), std::move(embed)};
}

}  // namespace olat
