#include <doctest.h>

#include <random>

#include "olat/constructions.hpp"
#include "olat/morphisms.hpp"
#include "olat/ortho.hpp"
#include "fixtures.hpp"

using namespace olat;

namespace {

Embedding embed(LatticePtr s, LatticePtr t, std::vector<ElementId> map) {
    Embedding e;
    e.source = std::move(s);
    e.target = std::move(t);
    e.map = std::move(map);
    return e;
}

ElementId by_name(const FiniteLattice& l, const std::string& n) {
    for (ElementId x = 0; x < l.size(); ++x)
        if (l.name(x) == n) return x;
    REQUIRE(false);
    return -1;
}

}  // namespace

TEST_CASE("B2 into B3 along an atom and its complement is a sublattice") {
    Ortholattice b2 = zoo::ortho("B2");
    Ortholattice b3 = zoo::ortho("B3");
    const auto& l3 = *b3.lattice;
    ElementId x = by_name(l3, "x"), yz = by_name(l3, "yz");
    auto res = check_sub01(embed(b2.lattice, b3.lattice,
                                 {l3.bottom(), x, yz, l3.top()}));
    REQUIRE(std::holds_alternative<Embedding>(res));
    CHECK(std::get<Embedding>(res).has(Cert::Sub01));
}

TEST_CASE("that sublattice is not a strong extension: witness below yz") {
    Ortholattice b2 = zoo::ortho("B2");
    Ortholattice b3 = zoo::ortho("B3");
    const auto& l3 = *b3.lattice;
    ElementId x = by_name(l3, "x"), yz = by_name(l3, "yz");
    auto res = check_triangle(embed(b2.lattice, b3.lattice,
                                    {l3.bottom(), x, yz, l3.top()}));
    REQUIRE(std::holds_alternative<MorphismError>(res));
    const auto& e = std::get<MorphismError>(res);
    CHECK(e.kind == MorphismError::Kind::NotDownwardClosed);
}

TEST_CASE("atom-to-atoms map into B3 is not join preserving") {
    Ortholattice b2 = zoo::ortho("B2");
    Ortholattice b3 = zoo::ortho("B3");
    const auto& l3 = *b3.lattice;
    auto res = check_sub01(embed(b2.lattice, b3.lattice,
                                 {l3.bottom(), by_name(l3, "x"),
                                  by_name(l3, "y"), l3.top()}));
    REQUIRE(std::holds_alternative<MorphismError>(res));
    CHECK(std::get<MorphismError>(res).kind ==
          MorphismError::Kind::NotJoinPreserving);
}

TEST_CASE("non-injective maps are rejected up front") {
    LatticePtr c2 = fixtures::zoo_lattice("chain2");
    auto res = check_sub01(embed(c2, c2, {0, 0}));
    REQUIRE(std::holds_alternative<MorphismError>(res));
    CHECK(std::get<MorphismError>(res).kind == MorphismError::Kind::NotInjective);
}

TEST_CASE("chain3 into chain4 skipping one level: dual-strong but not strong") {
    LatticePtr c3 = fixtures::zoo_lattice("chain3");
    LatticePtr c4 = fixtures::zoo_lattice("chain4");
    // heights give the chain order regardless of id layout
    auto rank3 = c3->heights();
    auto rank4 = c4->heights();
    std::vector<ElementId> by_rank3(3), by_rank4(4);
    for (ElementId i = 0; i < 3; ++i) by_rank3[rank3[i]] = i;
    for (ElementId i = 0; i < 4; ++i) by_rank4[rank4[i]] = i;
    std::vector<ElementId> map(3);
    map[by_rank3[0]] = by_rank4[0];
    map[by_rank3[1]] = by_rank4[2];  // skip rank 1
    map[by_rank3[2]] = by_rank4[3];

    auto down = check_triangle(embed(c3, c4, map));
    REQUIRE(std::holds_alternative<MorphismError>(down));
    CHECK(std::get<MorphismError>(down).kind ==
          MorphismError::Kind::NotDownwardClosed);

    auto up = check_triangle_dual(embed(c3, c4, map));
    REQUIRE(std::holds_alternative<TriangleResult>(up));
    const auto& tr = std::get<TriangleResult>(up);
    CHECK(tr.embedding.has(Cert::TriangleDual));
    // least image element above the skipped level is the middle of c3
    CHECK(tr.projection[by_rank4[1]] == by_rank3[1]);
}

TEST_CASE("horizontal sum left block is a strong extension with bottom projections") {
    LatticePtr m2 = fixtures::zoo_lattice("M2");
    LatticePtr n5 = fixtures::zoo_lattice("N5");
    ConstructionResult hs = horizontal_sum(m2, n5);
    const Embedding& a = hs.embeddings.at("A");
    CHECK(a.has(Cert::Triangle));
    auto res = check_triangle(a);
    REQUIRE(std::holds_alternative<TriangleResult>(res));
    const auto& tr = std::get<TriangleResult>(res);
    // projections: image elements project to themselves, B-interior to bottom
    std::vector<bool> in_image(hs.lattice->size(), false);
    for (ElementId s = 0; s < m2->size(); ++s) {
        in_image[a.map[s]] = true;
        CHECK(tr.projection[a.map[s]] == s);
    }
    for (ElementId t = 0; t < hs.lattice->size(); ++t)
        if (!in_image[t] && t != hs.lattice->top())
            CHECK(tr.projection[t] == m2->bottom());
}

TEST_CASE("projection is a lower adjoint on the image") {
    std::mt19937 rng(41);
    for (int t = 0; t < 30; ++t) {
        Ortholattice o0 = fixtures::random_small_ortho(rng);
        TriangleResult tr = fixtures::random_extension(o0, rng, 40);
        const Embedding& e = tr.embedding;
        const auto& tgt = *e.target;
        const auto& src = *e.source;
        for (ElementId y = 0; y < tgt.size(); ++y) {
            ElementId p = tr.projection[y];
            CHECK(tgt.leq(e.map[p], y));
            for (ElementId s = 0; s < src.size(); ++s)
                CHECK(tgt.leq(e.map[s], y) == src.leq(s, p));
        }
    }
}

TEST_CASE("convexity: chain inside the glued interior passes, with-gap fails") {
    LatticePtr c4 = fixtures::zoo_lattice("chain4");
    auto rank = c4->heights();
    std::vector<ElementId> by_rank(4);
    for (ElementId i = 0; i < 4; ++i) by_rank[rank[i]] = i;
    LatticePtr c2 = fixtures::zoo_lattice("chain2");
    LatticePtr c3 = fixtures::zoo_lattice("chain3");
    auto rank3 = c3->heights();
    std::vector<ElementId> by_rank3(3);
    for (ElementId i = 0; i < 3; ++i) by_rank3[rank3[i]] = i;

    // bounds map: image {0, 1} -- trivially convex (interior empty)
    auto ok = check_convex(embed(c2, c4, {by_rank[0], by_rank[3]}));
    CHECK(std::holds_alternative<Embedding>(ok));

    // image {0, rank1, rank3}: convex in the bounds-excluding sense,
    // nothing strictly between two interior image elements is missed
    auto ok2 = check_convex(
        embed(c3, c4, {by_rank[0], by_rank[1], by_rank[3]}));
    CHECK(std::holds_alternative<Embedding>(ok2));

    // image {0, rank1, rank3, top}? need a gap between interior elements:
    // chain5 target with image interior {r1, r3} missing r2.
    LatticePtr c5 = fixtures::zoo_lattice("chain5");
    auto rank5 = c5->heights();
    std::vector<ElementId> by_rank5(5);
    for (ElementId i = 0; i < 5; ++i) by_rank5[rank5[i]] = i;
    auto bad = check_convex(
        embed(c3, c5, {by_rank5[1], by_rank5[3], by_rank5[4]}));
    REQUIRE(std::holds_alternative<MorphismError>(bad));
    CHECK(std::get<MorphismError>(bad).kind == MorphismError::Kind::NotConvex);
}

TEST_CASE("sup can drop in an extension when the source sup is the top") {
    Ortholattice b2 = zoo::ortho("B2");
    Ortholattice b3 = zoo::ortho("B3");
    const auto& l3 = *b3.lattice;
    Embedding e = embed(b2.lattice, b3.lattice,
                        {l3.bottom(), by_name(l3, "x"), by_name(l3, "y"),
                         l3.top()});
    std::vector<ElementId> sub = {1, 2};  // the two atoms of B2
    SupAgreementReport r = sup_agreement(e, sub);
    CHECK(r.source_sup == b2.lattice->top());
    CHECK(r.target_sup == by_name(l3, "xy"));
    CHECK(r.inequality_holds);
    CHECK(!r.hypotheses_apply);  // source sup is the top
    CHECK(!r.equal);
}

TEST_CASE("sup agrees under a convex image with small sup") {
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        Ortholattice o0 = fixtures::random_small_ortho(rng);
        TriangleResult tr = fixtures::random_extension(o0, rng, 30);
        Embedding e = tr.embedding;
        auto conv = check_convex(e);
        if (!std::holds_alternative<Embedding>(conv)) continue;
        e = std::get<Embedding>(conv);
        const auto& src = *e.source;
        for (int k = 0; k < 10; ++k) {
            std::vector<ElementId> sub;
            for (int i = 0; i < 3; ++i)
                sub.push_back(static_cast<ElementId>(rng() % src.size()));
            SupAgreementReport r = sup_agreement(e, sub);
            CHECK(r.inequality_holds);
            if (r.hypotheses_apply) CHECK(r.equal);
        }
    }
}

TEST_CASE("subortholattice embeddings commute with perp") {
    Ortholattice b2 = zoo::ortho("B2");
    Ortholattice mo2 = zoo::ortho("MO2");
    const auto& lm = *mo2.lattice;
    ElementId a = by_name(lm, "a"), ap = by_name(lm, "a'"),
              bp = by_name(lm, "b'");
    auto good = check_subortholattice(
        b2, mo2, embed(b2.lattice, mo2.lattice, {lm.bottom(), a, ap, lm.top()}));
    REQUIRE(std::holds_alternative<Embedding>(good));
    CHECK(std::get<Embedding>(good).has(Cert::SubOrtho));

    auto bad = check_subortholattice(
        b2, mo2, embed(b2.lattice, mo2.lattice, {lm.bottom(), a, bp, lm.top()}));
    REQUIRE(std::holds_alternative<MorphismError>(bad));
    CHECK(std::get<MorphismError>(bad).kind ==
          MorphismError::Kind::PerpNotPreserved);
}

TEST_CASE("composition chains maps and drops stale certificates") {
    LatticePtr c2 = fixtures::zoo_lattice("chain2");
    ConstructionResult hs1 = horizontal_sum(c2, fixtures::zoo_lattice("M2"));
    ConstructionResult hs2 =
        horizontal_sum(hs1.lattice, fixtures::zoo_lattice("chain3"));
    Embedding c = compose(hs1.embeddings.at("A"), hs2.embeddings.at("A"));
    CHECK(c.source.get() == c2.get());
    CHECK(c.target.get() == hs2.lattice.get());
    CHECK(c.certs.empty());
    for (ElementId s = 0; s < c2->size(); ++s)
        CHECK(c.map[s] == hs2.embeddings.at("A").map[hs1.embeddings.at("A").map[s]]);
    // the composite of strong extensions is again one
    auto res = check_triangle(c);
    CHECK(std::holds_alternative<TriangleResult>(res));
}

TEST_CASE("identity embedding is strong with identity projection") {
    LatticePtr l = fixtures::zoo_lattice("N5");
    TriangleResult tr = require_triangle(identity_embedding(l));
    for (ElementId x = 0; x < l->size(); ++x) CHECK(tr.projection[x] == x);
}
