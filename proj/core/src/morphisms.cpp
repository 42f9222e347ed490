#include "olat/morphisms.hpp"

#include <stdexcept>

namespace olat {

std::string cert_name(Cert c) {
    switch (c) {
        case Cert::Sub01: return "Sub01";
        case Cert::Triangle: return "Triangle";
        case Cert::TriangleDual: return "TriangleDual";
        case Cert::Convex: return "Convex";
        case Cert::SubOrtho: return "SubOrtho";
    }
    return "?";
}

std::string describe(const MorphismError& e) {
    using K = MorphismError::Kind;
    switch (e.kind) {
        case K::NotInjective: return "NotInjective: " + e.message;
        case K::NotMeetPreserving: return "NotMeetPreserving: " + e.message;
        case K::NotJoinPreserving: return "NotJoinPreserving: " + e.message;
        case K::BoundsNotPreserved: return "BoundsNotPreserved: " + e.message;
        case K::NoGreatestBelow: return "NoGreatestBelow: " + e.message;
        case K::NotDownwardClosed: return "NotDownwardClosed: " + e.message;
        case K::NotConvex: return "NotConvex: " + e.message;
        case K::PerpNotPreserved: return "PerpNotPreserved: " + e.message;
        case K::PreconditionNotCertified: return "PreconditionNotCertified: " + e.message;
    }
    return "unknown error";
}

namespace {

using K = MorphismError::Kind;

std::optional<MorphismError> check_injective(const Embedding& e) {
    const int n = e.source->size();
    if (static_cast<int>(e.map.size()) != n)
        return MorphismError{K::NotInjective, -1, -1, -1, "map has wrong size"};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (e.map[i] == e.map[j])
                return MorphismError{K::NotInjective, i, j, -1,
                                     "elements " + e.source->name(i) + " and " +
                                         e.source->name(j) + " collide"};
    return std::nullopt;
}

std::vector<char> image_mask(const Embedding& e) {
    std::vector<char> in_image(e.target->size(), 0);
    for (ElementId t : e.map) in_image[t] = 1;
    return in_image;
}

}  // namespace

EmbeddingResult check_sub01(Embedding e) {
    if (auto err = check_injective(e)) return *err;
    const auto& S = *e.source;
    const auto& T = *e.target;
    if (e.map[S.bottom()] != T.bottom() || e.map[S.top()] != T.top())
        return MorphismError{K::BoundsNotPreserved, S.bottom(), S.top(), -1,
                             "bounds map to " + T.name(e.map[S.bottom()]) + ", " +
                                 T.name(e.map[S.top()])};
    for (ElementId x = 0; x < S.size(); ++x)
        for (ElementId y = 0; y < S.size(); ++y) {
            if (e.map[S.meet(x, y)] != T.meet(e.map[x], e.map[y]))
                return MorphismError{K::NotMeetPreserving, x, y, -1,
                                     "meet of (" + S.name(x) + ", " + S.name(y) +
                                         ") not preserved"};
            if (e.map[S.join(x, y)] != T.join(e.map[x], e.map[y]))
                return MorphismError{K::NotJoinPreserving, x, y, -1,
                                     "join of (" + S.name(x) + ", " + S.name(y) +
                                         ") not preserved"};
        }
    e.certs.insert(Cert::Sub01);
    return e;
}

std::variant<TriangleResult, MorphismError> check_triangle(Embedding e) {
    if (!e.has(Cert::Sub01)) {
        auto res = check_sub01(std::move(e));
        if (auto* err = std::get_if<MorphismError>(&res)) return *err;
        e = std::get<Embedding>(std::move(res));
    }
    const auto& S = *e.source;
    const auto& T = *e.target;

    std::vector<ElementId> pi(T.size(), -1);
    for (ElementId x = 0; x < T.size(); ++x) {
        ElementId best = -1;
        for (ElementId z = 0; z < S.size(); ++z) {
            if (!T.leq(e.map[z], x)) continue;
            if (best == -1 || S.leq(best, z)) best = z;
        }
        for (ElementId z = 0; z < S.size(); ++z)
            if (T.leq(e.map[z], x) && (best == -1 || !T.leq(e.map[z], e.map[best])))
                return MorphismError{K::NoGreatestBelow, x, z, best,
                                     "no greatest image element below " + T.name(x)};
        if (best == -1)
            return MorphismError{K::NoGreatestBelow, x, -1, -1,
                                 "no image element below " + T.name(x)};
        pi[x] = best;
    }

    // Downward closure of the image minus the top.
    auto in_image = image_mask(e);
    for (ElementId z = 0; z < S.size(); ++z) {
        if (e.map[z] == T.top()) continue;
        for (ElementId x = 0; x < T.size(); ++x)
            if (T.leq(x, e.map[z]) && !in_image[x])
                return MorphismError{K::NotDownwardClosed, z, x, -1,
                                     T.name(x) + " lies below image element " +
                                         S.name(z) + " but outside the image"};
    }

    e.certs.insert(Cert::Triangle);
    return TriangleResult{std::move(e), std::move(pi)};
}

std::variant<TriangleResult, MorphismError> check_triangle_dual(Embedding e) {
    if (!e.has(Cert::Sub01)) {
        auto res = check_sub01(std::move(e));
        if (auto* err = std::get_if<MorphismError>(&res)) return *err;
        e = std::get<Embedding>(std::move(res));
    }
    Embedding dual_e;
    dual_e.source = std::make_shared<const FiniteLattice>(e.source->dual());
    dual_e.target = std::make_shared<const FiniteLattice>(e.target->dual());
    dual_e.map = e.map;
    auto res = check_triangle(std::move(dual_e));
    if (auto* err = std::get_if<MorphismError>(&res)) return *err;
    e.certs.insert(Cert::TriangleDual);
    return TriangleResult{std::move(e), std::move(std::get<TriangleResult>(res).projection)};
}

EmbeddingResult check_convex(Embedding e) {
    if (auto err = check_injective(e)) return *err;
    const auto& T = *e.target;
    auto in_image = image_mask(e);
    for (ElementId a = 0; a < T.size(); ++a) {
        if (!in_image[a] || a == T.bottom()) continue;
        for (ElementId a2 = 0; a2 < T.size(); ++a2) {
            if (!in_image[a2] || a2 == T.top()) continue;
            if (!T.leq(a, a2)) continue;
            for (ElementId x = 0; x < T.size(); ++x)
                if (T.leq(a, x) && T.leq(x, a2) && !in_image[x])
                    return MorphismError{K::NotConvex, a, x, a2,
                                         T.name(x) + " lies between image elements " +
                                             T.name(a) + " and " + T.name(a2)};
        }
    }
    e.certs.insert(Cert::Convex);
    return e;
}

SupAgreementReport sup_agreement(const Embedding& e, std::span<const ElementId> subset) {
    const auto& S = *e.source;
    const auto& T = *e.target;
    ElementId s_sup = S.sup(subset);
    std::vector<ElementId> mapped;
    mapped.reserve(subset.size());
    for (ElementId x : subset) mapped.push_back(e.map[x]);
    ElementId t_sup = T.sup(mapped);

    bool convex = std::holds_alternative<Embedding>(check_convex(e));
    SupAgreementReport r;
    r.source_sup = s_sup;
    r.target_sup = t_sup;
    r.inequality_holds = T.leq(t_sup, e.map[s_sup]);
    r.hypotheses_apply = convex && s_sup != S.top();
    r.equal = e.map[s_sup] == t_sup;
    return r;
}

EmbeddingResult check_subortholattice(const Ortholattice& source,
                                      const Ortholattice& target, Embedding e) {
    if (!e.has(Cert::Sub01)) {
        auto res = check_sub01(std::move(e));
        if (auto* err = std::get_if<MorphismError>(&res)) return *err;
        e = std::get<Embedding>(std::move(res));
    }
    for (ElementId x = 0; x < e.source->size(); ++x)
        if (e.map[source.perp[x]] != target.perp[e.map[x]])
            return MorphismError{K::PerpNotPreserved, x, -1, -1,
                                 "perp of " + e.source->name(x) + " not preserved"};
    e.certs.insert(Cert::SubOrtho);
    return e;
}

Embedding compose(const Embedding& first, const Embedding& second) {
    if (first.target.get() != second.source.get() &&
        !(first.target->size() == second.source->size() &&
          first.target->order() == second.source->order()))
        throw std::invalid_argument("embeddings are not composable");
    Embedding out;
    out.source = first.source;
    out.target = second.target;
    out.map.resize(first.map.size());
    for (std::size_t i = 0; i < first.map.size(); ++i)
        out.map[i] = second.map[first.map[i]];
    return out;
}

Embedding identity_embedding(LatticePtr lattice) {
    Embedding e;
    e.source = lattice;
    e.target = std::move(lattice);
    e.map.resize(e.source->size());
    for (int i = 0; i < e.source->size(); ++i) e.map[i] = i;
    return e;
}

Embedding require_sub01(Embedding e) {
    auto res = check_sub01(std::move(e));
    if (auto* err = std::get_if<MorphismError>(&res))
        throw std::invalid_argument(describe(*err));
    return std::get<Embedding>(std::move(res));
}

TriangleResult require_triangle(Embedding e) {
    auto res = check_triangle(std::move(e));
    if (auto* err = std::get_if<MorphismError>(&res))
        throw std::invalid_argument(describe(*err));
    return std::get<TriangleResult>(std::move(res));
}

TriangleResult require_triangle_dual(Embedding e) {
    auto res = check_triangle_dual(std::move(e));
    if (auto* err = std::get_if<MorphismError>(&res))
        throw std::invalid_argument(describe(*err));
    return std::get<TriangleResult>(std::move(res));
}

}  // namespace olat
