#include "olat/constructions.hpp"

#include <algorithm>

namespace olat {

namespace {

using CK = ConstructionError::Kind;

void check_cap(long long n, int cap) {
    if (n > cap)
        throw ConstructionError(CK::SizeLimitExceeded,
                                "result would have " + std::to_string(n) +
                                    " elements, cap is " + std::to_string(cap));
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
    return a.get() == b.get() || (a->size() == b->size() && a->order() == b->order());
}

}  // namespace

ConstructionResult product(LatticePtr a, LatticePtr b, int size_cap) {
    const auto& A = *a;
    const auto& B = *b;
    const long long n = static_cast<long long>(A.size()) * B.size();
    check_cap(n, size_cap);

    std::vector<std::string> names;
    names.reserve(n);
    for (int x = 0; x < A.size(); ++x)
        for (int y = 0; y < B.size(); ++y)
            names.push_back("(" + A.name(x) + "," + B.name(y) + ")");

    BitRel rel(static_cast<int>(n));
    for (int x1 = 0; x1 < A.size(); ++x1)
        for (int y1 = 0; y1 < B.size(); ++y1)
            for (int x2 = 0; x2 < A.size(); ++x2)
                for (int y2 = 0; y2 < B.size(); ++y2)
                    if (A.leq(x1, x2) && B.leq(y1, y2))
                        rel.set(x1 * B.size() + y1, x2 * B.size() + y2);

    Poset p = Poset::from_relation(std::move(names), std::move(rel));
    p.bottom = A.bottom() * B.size() + B.bottom();
    p.top = A.top() * B.size() + B.top();

    ConstructionResult out;
    out.lattice = make_lattice(p);
    return out;
}

ConstructionResult horizontal_sum(LatticePtr a, LatticePtr b, int size_cap) {
    const auto& A = *a;
    const auto& B = *b;
    const int n = A.size() + B.size() - 2;
    check_cap(n, size_cap);

    // Layout: all of A first, then the interior of B.
    std::vector<ElementId> b_to_h(B.size(), -1);
    b_to_h[B.bottom()] = A.bottom();
    b_to_h[B.top()] = A.top();
    std::vector<std::string> names(A.names());
    for (int y = 0; y < B.size(); ++y) {
        if (y == B.bottom() || y == B.top()) continue;
        b_to_h[y] = static_cast<ElementId>(names.size());
        names.push_back(B.name(y));
    }

    std::vector<ElementId> acoord(n, -1), bcoord(n, -1);
    for (int x = 0; x < A.size(); ++x) acoord[x] = x;
    bcoord[A.bottom()] = B.bottom();
    bcoord[A.top()] = B.top();
    for (int y = 0; y < B.size(); ++y)
        if (y != B.bottom() && y != B.top()) bcoord[b_to_h[y]] = y;

    BitRel rel(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (acoord[u] != -1 && acoord[v] != -1 && A.leq(acoord[u], acoord[v]))
                rel.set(u, v);
            if (bcoord[u] != -1 && bcoord[v] != -1 && B.leq(bcoord[u], bcoord[v]))
                rel.set(u, v);
        }

    Poset p = Poset::from_relation(std::move(names), std::move(rel));
    p.bottom = A.bottom();
    p.top = A.top();

    ConstructionResult out;
    out.lattice = make_lattice(p);

    Embedding ea;
    ea.source = a;
    ea.target = out.lattice;
    ea.map.resize(A.size());
    for (int x = 0; x < A.size(); ++x) ea.map[x] = x;
    out.embeddings["A"] = require_triangle(std::move(ea)).embedding;

    Embedding eb;
    eb.source = b;
    eb.target = out.lattice;
    eb.map = b_to_h;
    out.embeddings["B"] = require_sub01(std::move(eb));

    out.tags.resize(n);
    for (int u = 0; u < n; ++u) {
        if (u == A.bottom() || u == A.top())
            out.tags[u] = {AmalgamSide::Shared, u};
        else if (acoord[u] != -1)
            out.tags[u] = {AmalgamSide::Left, acoord[u]};
        else
            out.tags[u] = {AmalgamSide::Right, bcoord[u]};
    }
    return out;
}

ConstructionResult glued_union(const TriangleResult& left, const TriangleResult& right,
                               int size_cap) {
    const Embedding& e1 = left.embedding;
    const Embedding& e2 = right.embedding;
    if (!e1.has(Cert::Triangle))
        throw ConstructionError(CK::PreconditionNotCertified,
                                "left embedding lacks a Triangle certificate");
    if (!e2.has(Cert::TriangleDual))
        throw ConstructionError(CK::PreconditionNotCertified,
                                "right embedding lacks a TriangleDual certificate");
    if (!same_lattice(e1.source, e2.source))
        throw ConstructionError(CK::PreconditionNotCertified,
                                "embeddings do not share L0");

    const auto& L0 = *e1.source;
    const auto& L1 = *e1.target;
    const auto& L2 = *e2.target;
    const int n0 = L0.size(), n1 = L1.size(), n2 = L2.size();
    const int n = n0 + (n1 - n0) + (n2 - n0);
    check_cap(n, size_cap);

    std::vector<ElementId> preim1(n1, -1), preim2(n2, -1);
    for (int z = 0; z < n0; ++z) preim1[e1.map[z]] = z;
    for (int z = 0; z < n0; ++z) preim2[e2.map[z]] = z;

    // Shared block first (amalgam id of z in L0 is z itself), then the
    // interiors of L1 and L2.
    std::vector<std::string> names(L0.names());
    std::vector<AmalgamTag> tags;
    tags.reserve(n);
    for (int z = 0; z < n0; ++z) tags.push_back({AmalgamSide::Shared, z});
    std::vector<ElementId> l1_to_am(n1, -1), l2_to_am(n2, -1);
    for (int x = 0; x < n1; ++x)
        if (preim1[x] != -1) l1_to_am[x] = preim1[x];
    for (int y = 0; y < n2; ++y)
        if (preim2[y] != -1) l2_to_am[y] = preim2[y];
    for (int x = 0; x < n1; ++x) {
        if (preim1[x] != -1) continue;
        l1_to_am[x] = static_cast<ElementId>(names.size());
        names.push_back("L:" + L1.name(x));
        tags.push_back({AmalgamSide::Left, x});
    }
    for (int y = 0; y < n2; ++y) {
        if (preim2[y] != -1) continue;
        l2_to_am[y] = static_cast<ElementId>(names.size());
        names.push_back("R:" + L2.name(y));
        tags.push_back({AmalgamSide::Right, y});
    }

    std::vector<ElementId> l1c(n, -1), l2c(n, -1);
    for (int x = 0; x < n1; ++x) l1c[l1_to_am[x]] = x;
    for (int y = 0; y < n2; ++y) l2c[l2_to_am[y]] = y;

    // Three-case order characterization.
    BitRel rel(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            bool le = false;
            if (l1c[u] != -1 && l1c[v] != -1 && L1.leq(l1c[u], l1c[v])) le = true;
            if (!le && l2c[u] != -1 && l2c[v] != -1 && L2.leq(l2c[u], l2c[v])) le = true;
            if (!le && l2c[u] != -1 && l1c[v] != -1) {
                for (int z = 0; z < n0 && !le; ++z)
                    if (L2.leq(l2c[u], e2.map[z]) && L1.leq(e1.map[z], l1c[v])) le = true;
            }
            if (le) rel.set(u, v);
        }

    // Independent oracle: brute-force transitive closure of the union of
    // the two component orders.
    BitRel oracle(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (l1c[u] != -1 && l1c[v] != -1 && L1.leq(l1c[u], l1c[v])) oracle.set(u, v);
            if (l2c[u] != -1 && l2c[v] != -1 && L2.leq(l2c[u], l2c[v])) oracle.set(u, v);
        }
    oracle.transitive_close();
    if (!(oracle == rel)) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (oracle.get(u, v) != rel.get(u, v))
                    throw ConstructionError(
                        CK::OrderMismatch,
                        "characterized order disagrees with transitive closure at (" +
                            names[u] + ", " + names[v] + ")");
    }

    Poset p = Poset::from_relation(std::move(names), rel);
    p.bottom = L0.bottom();
    p.top = L0.top();

    ConstructionResult out;
    out.lattice = make_lattice(p);
    out.oracle_order = std::move(oracle);
    out.tags = std::move(tags);
    const auto& L = *out.lattice;

    // The three-case meet formula (and its dual) must agree with the
    // exhaustively validated tables.
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            ElementId m, j;
            if (l1c[u] != -1 && l1c[v] != -1) {
                m = l1_to_am[L1.meet(l1c[u], l1c[v])];
                j = l1_to_am[L1.join(l1c[u], l1c[v])];
            } else if (l2c[u] != -1 && l2c[v] != -1) {
                m = l2_to_am[L2.meet(l2c[u], l2c[v])];
                j = l2_to_am[L2.join(l2c[u], l2c[v])];
            } else if (l1c[u] != -1) {  // u in L1, v in L2
                ElementId zd = left.projection[l1c[u]];
                m = l2_to_am[L2.meet(e2.map[zd], l2c[v])];
                ElementId zu = right.projection[l2c[v]];
                j = l1_to_am[L1.join(e1.map[zu], l1c[u])];
            } else {  // u in L2, v in L1
                ElementId zd = left.projection[l1c[v]];
                m = l2_to_am[L2.meet(e2.map[zd], l2c[u])];
                ElementId zu = right.projection[l2c[u]];
                j = l1_to_am[L1.join(e1.map[zu], l1c[v])];
            }
            if (m != L.meet(u, v))
                throw ConstructionError(CK::OrderMismatch,
                                        "meet formula disagrees with glb at (" +
                                            L.name(u) + ", " + L.name(v) + ")");
            if (j != L.join(u, v))
                throw ConstructionError(CK::OrderMismatch,
                                        "join formula disagrees with lub at (" +
                                            L.name(u) + ", " + L.name(v) + ")");
        }

    Embedding em0;
    em0.source = e1.source;
    em0.target = out.lattice;
    em0.map.resize(n0);
    for (int z = 0; z < n0; ++z) em0.map[z] = z;
    out.embeddings["L0"] = require_sub01(std::move(em0));

    Embedding em1;
    em1.source = e1.target;
    em1.target = out.lattice;
    em1.map = l1_to_am;
    out.embeddings["L1"] = require_sub01(std::move(em1));

    Embedding em2;
    em2.source = e2.target;
    em2.target = out.lattice;
    em2.map = l2_to_am;
    out.embeddings["L2"] = require_sub01(std::move(em2));

    return out;
}

ConstructionResult dual_copy(const TriangleResult& left, const Ortholattice& o0,
                             int size_cap) {
    const Embedding& e1 = left.embedding;
    if (!e1.has(Cert::Triangle))
        throw ConstructionError(CK::PreconditionNotCertified,
                                "embedding lacks a Triangle certificate");
    if (!same_lattice(e1.source, o0.lattice))
        throw ConstructionError(CK::PreconditionNotCertified,
                                "ortholattice does not match the embedding source");

    const auto& L0 = *e1.source;
    const auto& L1 = *e1.target;
    const int n0 = L0.size(), n1 = L1.size();
    check_cap(n1, size_cap);

    std::vector<ElementId> preim1(n1, -1);
    for (int z = 0; z < n0; ++z) preim1[e1.map[z]] = z;

    // Element i of the copy is iota(x_i); for x_i = image of w the copy
    // element is the shared L0 element perp(w).
    std::vector<std::string> names(n1);
    std::vector<AmalgamTag> tags(n1);
    for (int i = 0; i < n1; ++i) {
        if (preim1[i] != -1) {
            ElementId z = o0.perp[preim1[i]];
            names[i] = L0.name(z);
            tags[i] = {AmalgamSide::Shared, z};
        } else {
            names[i] = L1.name(i) + "'";
            tags[i] = {AmalgamSide::Right, i};
        }
    }

    BitRel rel(n1);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            if (L1.leq(j, i)) rel.set(i, j);

    Poset p = Poset::from_relation(std::move(names), std::move(rel));
    p.bottom = L1.top();
    p.top = L1.bottom();

    ConstructionResult out;
    out.lattice = make_lattice(p);
    out.tags = std::move(tags);

    Embedding e2;
    e2.source = e1.source;
    e2.target = out.lattice;
    e2.map.resize(n0);
    for (int z = 0; z < n0; ++z) e2.map[z] = e1.map[o0.perp[z]];
    out.embeddings["L0"] = require_triangle_dual(std::move(e2)).embedding;
    return out;
}

ConstructionResult ortho_construction(const TriangleResult& left, const Ortholattice& o0,
                                      int size_cap) {
    ConstructionResult dc = dual_copy(left, o0, size_cap);
    TriangleResult tr2 = require_triangle_dual(dc.embeddings.at("L0"));

    ConstructionResult g = glued_union(left, tr2, size_cap);
    const int n = g.lattice->size();
    const int n1 = left.embedding.target->size();

    std::vector<ElementId> left_am(n1, -1), right_am(n1, -1);
    for (int u = 0; u < n; ++u) {
        if (g.tags[u].side == AmalgamSide::Left) left_am[g.tags[u].origin] = u;
        if (g.tags[u].side == AmalgamSide::Right) right_am[g.tags[u].origin] = u;
    }

    // perp is iota on the L1 side and its inverse on the copy; the copy
    // element with L2-index x is exactly iota(x).
    std::vector<ElementId> perp(n, -1);
    for (int u = 0; u < n; ++u) {
        const AmalgamTag& t = g.tags[u];
        switch (t.side) {
            case AmalgamSide::Shared: perp[u] = o0.perp[t.origin]; break;
            case AmalgamSide::Left: perp[u] = right_am[t.origin]; break;
            case AmalgamSide::Right: perp[u] = left_am[t.origin]; break;
        }
    }

    ConstructionResult out;
    out.lattice = g.lattice;
    out.ortho = require_ortho(g.lattice, std::move(perp));
    out.oracle_order = std::move(g.oracle_order);
    out.tags = std::move(g.tags);

    auto sub = check_subortholattice(o0, *out.ortho, g.embeddings.at("L0"));
    if (auto* err = std::get_if<MorphismError>(&sub))
        throw ConstructionError(CK::PreconditionNotCertified, describe(*err));
    out.embeddings["L0"] = std::get<Embedding>(std::move(sub));
    out.embeddings["L1"] = g.embeddings.at("L1");
    out.embeddings["L2"] = g.embeddings.at("L2");
    return out;
}

namespace {

struct PowerPart {
    LatticePtr lat;
    std::vector<std::vector<ElementId>> tuples;  // ids into S
};

PowerPart build_power(const LatticePtr& s, int k, int size_cap) {
    if (k == 1) {
        PowerPart p;
        p.lat = s;
        p.tuples.resize(s->size());
        for (int i = 0; i < s->size(); ++i) p.tuples[i] = {i};
        return p;
    }
    // Iterated squaring: S^k = S^(k/2) x S^(k/2), odd factor peeled off.
    PowerPart a = build_power(s, k / 2, size_cap);
    PowerPart b = (k % 2 == 0) ? a : build_power(s, k - k / 2, size_cap);
    ConstructionResult prod = product(a.lat, b.lat, size_cap);
    PowerPart p;
    p.lat = prod.lattice;
    p.tuples.resize(p.lat->size());
    const int bn = b.lat->size();
    for (int i = 0; i < a.lat->size(); ++i)
        for (int j = 0; j < bn; ++j) {
            auto t = a.tuples[i];
            t.insert(t.end(), b.tuples[j].begin(), b.tuples[j].end());
            p.tuples[i * bn + j] = std::move(t);
        }
    return p;
}

}  // namespace

PowerWitness power_witness(LatticePtr base, std::vector<ElementId> sub_elements,
                           int arity, const std::vector<ElementId>* base_perp,
                           int size_cap) {
    const auto& B = *base;
    std::sort(sub_elements.begin(), sub_elements.end());
    sub_elements.erase(std::unique(sub_elements.begin(), sub_elements.end()),
                       sub_elements.end());

    std::vector<ElementId> sub_id(B.size(), -1);
    for (std::size_t i = 0; i < sub_elements.size(); ++i)
        sub_id[sub_elements[i]] = static_cast<ElementId>(i);
    if (sub_id[B.bottom()] == -1 || sub_id[B.top()] == -1)
        throw ConstructionError(CK::NotASublattice, "sublattice must contain the bounds");
    for (ElementId x : sub_elements)
        for (ElementId y : sub_elements) {
            if (sub_id[B.meet(x, y)] == -1 || sub_id[B.join(x, y)] == -1)
                throw ConstructionError(CK::NotASublattice,
                                        "set not closed under meet/join at (" +
                                            B.name(x) + ", " + B.name(y) + ")");
        }
    if (base_perp) {
        for (ElementId x : sub_elements)
            if (sub_id[(*base_perp)[x]] == -1)
                throw ConstructionError(CK::NotASublattice,
                                        "set not closed under perp at " + B.name(x));
    }

    const int sn = static_cast<int>(sub_elements.size());
    std::vector<std::string> snames;
    snames.reserve(sn);
    for (ElementId x : sub_elements) snames.push_back(B.name(x));
    BitRel srel(sn);
    for (int i = 0; i < sn; ++i)
        for (int j = 0; j < sn; ++j)
            if (B.leq(sub_elements[i], sub_elements[j])) srel.set(i, j);
    Poset sp = Poset::from_relation(std::move(snames), std::move(srel));
    sp.bottom = sub_id[B.bottom()];
    sp.top = sub_id[B.top()];

    PowerWitness w;
    w.arity = arity;
    w.sub = make_lattice(sp);
    w.sub_elements = sub_elements;

    PowerPart pw = build_power(w.sub, arity, size_cap);
    w.power = pw.lat;
    w.tuples = pw.tuples;
    for (int i = 0; i < w.power->size(); ++i) w.tuple_index[w.tuples[i]] = i;

    ConstructionResult hs = horizontal_sum(base, w.power, size_cap);
    w.ambient = hs.lattice;
    w.base_into_ambient = hs.embeddings.at("A");
    w.power_into_ambient = hs.embeddings.at("B");

    if (base_perp) {
        const auto& S = *w.sub;
        std::vector<ElementId> sperp(sn);
        for (int i = 0; i < sn; ++i) sperp[i] = sub_id[(*base_perp)[sub_elements[i]]];
        std::vector<ElementId> aperp(w.ambient->size(), -1);
        for (int x = 0; x < B.size(); ++x)
            aperp[w.base_into_ambient.map[x]] = w.base_into_ambient.map[(*base_perp)[x]];
        for (int p = 0; p < w.power->size(); ++p) {
            std::vector<ElementId> t = w.tuples[p];
            for (auto& c : t) c = sperp[c];
            aperp[w.power_into_ambient.map[p]] = w.power_into_ambient.map[w.tuple_index.at(t)];
        }
        (void)S;
        w.ambient_perp = require_ortho(w.ambient, aperp).perp;
    }
    return w;
}

ConstructionResult chain_union(const std::vector<Embedding>& tower) {
    if (tower.empty())
        throw ConstructionError(CK::PreconditionNotCertified, "empty tower");
    for (const auto& e : tower)
        if (!e.has(Cert::Sub01))
            throw ConstructionError(CK::PreconditionNotCertified,
                                    "tower step lacks a Sub01 certificate");
    Embedding composed = tower.front();
    bool all_triangle = tower.front().has(Cert::Triangle);
    for (std::size_t i = 1; i < tower.size(); ++i) {
        composed = compose(composed, tower[i]);
        all_triangle &= tower[i].has(Cert::Triangle);
    }
    composed = require_sub01(std::move(composed));
    if (all_triangle) {
        auto tr = check_triangle(composed);
        if (auto* ok = std::get_if<TriangleResult>(&tr)) composed = ok->embedding;
    }

    ConstructionResult out;
    out.lattice = tower.back().target;
    out.embeddings["L0"] = std::move(composed);
    return out;
}

}  // namespace olat
