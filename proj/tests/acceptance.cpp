// Standalone acceptance suite. Each criterion prints exactly one
// "PASS"/"FAIL" line; the exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "olat/constructions.hpp"
#include "olat/interpolation.hpp"
#include "olat/io.hpp"
#include "olat/lattice.hpp"
#include "olat/morphisms.hpp"
#include "olat/ortho.hpp"
#include "olat/terms.hpp"
#include "fixtures.hpp"

using namespace olat;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Instance {
    Ortholattice o0;
    TriangleResult left;
    TriangleResult right;
    ConstructionResult dual;
};

// Randomized certified (L0 strong-ext L1, L0 dual-strong-ext L2) instance
// with |glued result| <= max_result.
Instance random_instance(std::mt19937& rng, int max_result) {
    Ortholattice o0 = fixtures::random_small_ortho(rng);
    int max_l1 = (max_result + o0.size()) / 2;
    TriangleResult left = fixtures::random_extension(o0, rng, max_l1);
    Instance inst{o0, left, {}, dual_copy(left, o0)};
    inst.right = require_triangle_dual(inst.dual.embeddings.at("L0"));
    return inst;
}

// ---- criterion 1: glued-union characterization vs closure oracle ----

bool criterion1() {
    auto t0 = Clock::now();
    std::mt19937 rng(1001);
    int done = 0;
    while (done < 200) {
        Instance inst = random_instance(rng, 12);
        ConstructionResult gl;
        try {
            gl = glued_union(inst.left, inst.right, 12);
        } catch (const ConstructionError& e) {
            if (e.kind == ConstructionError::Kind::OrderMismatch) return false;
            continue;  // size cap; draw another instance
        }
        if (!gl.oracle_order || !(*gl.oracle_order == gl.lattice->order()))
            return false;

        // meet/join formulas on cross pairs outside the shared block
        const Embedding& g1 = gl.embeddings.at("L1");
        const Embedding& g2 = gl.embeddings.at("L2");
        const auto& l = *gl.lattice;
        const auto& l1 = *inst.left.embedding.target;
        const auto& l2 = *inst.dual.lattice;
        std::vector<bool> shared1(l1.size(), false), shared2(l2.size(), false);
        for (ElementId z = 0; z < inst.o0.size(); ++z) {
            shared1[inst.left.embedding.map[z]] = true;
            shared2[inst.right.embedding.map[z]] = true;
        }
        for (ElementId x = 0; x < l1.size(); ++x)
            for (ElementId y = 0; y < l2.size(); ++y) {
                if (!shared2[y]) {
                    ElementId px = inst.right.embedding.map[inst.left.projection[x]];
                    if (l.meet(g1.map[x], g2.map[y]) != g2.map[l2.meet(px, y)])
                        return false;
                }
                if (!shared1[x]) {
                    ElementId py = inst.left.embedding.map[inst.right.projection[y]];
                    if (l.join(g1.map[x], g2.map[y]) != g1.map[l1.join(x, py)])
                        return false;
                }
            }
        ++done;
    }
    return seconds_since(t0) <= 60.0;
}

// ---- criterion 2: ortho construction axioms over the same family ----

bool criterion2() {
    std::mt19937 rng(1002);
    int done = 0;
    while (done < 200) {
        Ortholattice o0 = fixtures::random_small_ortho(rng);
        TriangleResult left = fixtures::random_extension(o0, rng, 12);
        ConstructionResult oc;
        try {
            oc = ortho_construction(left, o0, 32);
        } catch (const ConstructionError&) {
            continue;
        }
        if (!oc.ortho) return false;
        const Ortholattice& o = *oc.ortho;
        if (!std::holds_alternative<Ortholattice>(validate_ortho(o.lattice, o.perp)))
            return false;
        Embedding e0 = oc.embeddings.at("L0");
        e0.certs.clear();
        if (!std::holds_alternative<Embedding>(
                check_subortholattice(o0, o, std::move(e0))))
            return false;
        // x v iota(x) = 1 for every x of L1 outside L0
        const Embedding& g1 = oc.embeddings.at("L1");
        std::vector<bool> shared(left.embedding.target->size(), false);
        for (ElementId z = 0; z < o0.size(); ++z)
            shared[left.embedding.map[z]] = true;
        for (ElementId x = 0; x < left.embedding.target->size(); ++x) {
            if (shared[x]) continue;
            ElementId ax = g1.map[x];
            if (o.lattice->join(ax, o.orth(ax)) != o.lattice->top()) return false;
        }
        ++done;
    }
    return true;
}

// ---- criterion 3: clone exactness on the 2-chain ----

bool criterion3() {
    auto t0 = Clock::now();
    Ortholattice c2 = zoo::ortho("chain2");
    CloneTable lat = polynomial_clone(c2.lattice, nullptr, CloneMode::LatticeOnly);
    CloneTable ort = polynomial_clone(c2.lattice, &c2.perp, CloneMode::Ortho);
    if (!lat.complete || lat.members.size() != 3) return false;
    if (!ort.complete || ort.members.size() != 4) return false;
    for (const CloneTable* ct : {&lat, &ort}) {
        EvalContext ctx{c2.lattice.get(),
                        ct->perp ? &*ct->perp : nullptr, &ct->coeffs};
        for (const auto& m : ct->members)
            for (ElementId x = 0; x < 2; ++x) {
                std::vector<ElementId> asg = {x};
                if (eval(m.witness, ctx, asg) != m.table[x]) return false;
            }
    }
    return seconds_since(t0) < 1.0;
}

// ---- criterion 4: diagonal antichain and monotone lift on the zoo ----

bool criterion4() {
    std::mt19937 rng(1004);
    for (const auto& name : zoo::ortho_names()) {
        Ortholattice o = zoo::ortho(name);
        for (int t = 0; t < 50; ++t) {
            std::vector<ElementId> vals(o.size());
            for (auto& v : vals) v = static_cast<ElementId>(rng() % o.size());
            AntichainLift lift;
            try {
                lift = antichain_lift(o, FunctionTable::total_unary(o.lattice, vals),
                                      1 << 14);
            } catch (const std::exception&) {
                return false;  // antichain or monotonicity violated
            }
            for (std::size_t i = 0; i < lift.antichain.size(); ++i)
                for (std::size_t j = i + 1; j < lift.antichain.size(); ++j)
                    if (lift.lprime->leq(lift.antichain[i], lift.antichain[j]) ||
                        lift.lprime->leq(lift.antichain[j], lift.antichain[i]))
                        return false;
            if (!monotone_check(lift.fbar).monotone) return false;
        }
    }
    return true;
}

// ---- criterion 5: pipeline success on the 2-chain, soundness at large ----

bool verify_trace(const Ortholattice& o0, const FunctionTable& f,
                  const PipelineTrace& t) {
    if (!t.result) return false;
    EvalContext ctx = eval_context(*t.result, t.h_coeffs);
    const Embedding& e0 = t.base_into_result;
    for (const auto& [key, value] : f.entries) {
        std::vector<ElementId> asg = {e0.map[key[0]]};
        if (eval(t.h, ctx, asg) != e0.map[value]) return false;
    }
    return true;
}

bool criterion5() {
    Ortholattice c2 = zoo::ortho("chain2");
    for (std::vector<ElementId> vals :
         {std::vector<ElementId>{1, 0}, {0, 0}, {1, 1}}) {
        FunctionTable f = FunctionTable::total_unary(c2.lattice, vals);
        PipelineTrace t = extend_pipeline(c2, f, ExtensionSource{}, 100000);
        if (t.status != PipelineTrace::Status::Success) return false;
        if (!t.verified || !verify_trace(c2, f, t)) return false;
    }

    std::mt19937 rng(1005);
    for (int t = 0; t < 1000; ++t) {
        Ortholattice o = rng() % 4 ? zoo::ortho("chain2") : zoo::ortho("B2");
        std::vector<std::pair<ElementId, ElementId>> pairs;
        for (ElementId x = 0; x < o.size(); ++x)
            if (rng() % 2)
                pairs.emplace_back(x, static_cast<ElementId>(rng() % o.size()));
        FunctionTable f = FunctionTable::partial_unary(o.lattice, pairs);
        PipelineTrace tr = extend_pipeline(o, f, ExtensionSource{}, 1500);
        if (tr.status == PipelineTrace::Status::Success &&
            (!tr.verified || !verify_trace(o, f, tr)))
            return false;  // a false Success
    }
    return true;
}

// ---- criterion 6: NNF equivalence and structural invariant ----

TermPtr random_term(std::mt19937& rng, int depth, int arity,
                    const std::vector<std::string>& coeffs) {
    int pick = static_cast<int>(rng() % (depth == 0 ? 2 : 5));
    switch (pick) {
        case 0: return tvar(static_cast<int>(rng() % arity));
        case 1: return tcoeff(coeffs[rng() % coeffs.size()]);
        case 2:
            return tmeet(random_term(rng, depth - 1, arity, coeffs),
                         random_term(rng, depth - 1, arity, coeffs));
        case 3:
            return tjoin(random_term(rng, depth - 1, arity, coeffs),
                         random_term(rng, depth - 1, arity, coeffs));
        default: return tperp(random_term(rng, depth - 1, arity, coeffs));
    }
}

bool criterion6() {
    std::mt19937 rng(1006);
    for (const char* name : {"MO2", "O6"}) {
        Ortholattice o = zoo::ortho(name);
        CoeffBinding binding = coeff_binding_for(*o.lattice);
        std::vector<std::string> coeffs;
        for (const auto& [k, v] : binding) coeffs.push_back(k);
        EvalContext ctx = eval_context(o, binding);
        for (int t = 0; t < 500; ++t) {
            TermPtr term = random_term(rng, 6, 2, coeffs);
            TermPtr n = nnf(term);
            if (!is_nnf(n)) return false;
            for (ElementId x = 0; x < o.size(); ++x)
                for (ElementId y = 0; y < o.size(); ++y) {
                    std::vector<ElementId> asg = {x, y};
                    if (eval(term, ctx, asg) != eval(n, ctx, asg)) return false;
                }
        }
    }
    return true;
}

// ---- criterion 7: n-ary reduction over powers of S inside B2 ----

bool criterion7() {
    Ortholattice b2 = zoo::ortho("B2");

    // identity iota(s,t) = iota1(s) v iota2(t), exhaustively on S^2
    for (std::vector<ElementId> sub : {std::vector<ElementId>{0, 3}, {0, 1, 3},
                                       {0, 1, 2, 3}}) {
        PowerWitness pw = power_witness(b2.lattice, sub, 2, nullptr, 1024);
        const int k = static_cast<int>(pw.sub_elements.size());
        ElementId sbot = -1;
        for (int i = 0; i < k; ++i)
            if (pw.sub_elements[i] == b2.lattice->bottom()) sbot = i;
        for (ElementId s = 0; s < k; ++s)
            for (ElementId t = 0; t < k; ++t)
                if (pw.power->join(pw.tuple_id({s, sbot}), pw.tuple_id({sbot, t})) !=
                    pw.tuple_id({s, t}))
                    return false;
    }

    // g = meet and g = join on |A| <= 4 with coordinates across S subsets
    std::vector<std::vector<std::vector<ElementId>>> domains = {
        {{1, 2}, {2, 1}, {1, 1}, {0, 3}},
        {{1, 3}, {3, 2}},
        {{0, 0}, {3, 3}, {1, 2}},
    };
    for (const auto& dom : domains)
        for (bool want_meet : {true, false}) {
            FunctionTable g;
            g.arity = 2;
            g.domain = b2.lattice;
            for (const auto& key : dom)
                g.entries[key] = want_meet ? b2.lattice->meet(key[0], key[1])
                                           : b2.lattice->join(key[0], key[1]);
            NaryResult r = nary_reduce(b2.lattice, &b2.perp,
                                       CloneMode::LatticeOnly, g, 100000, 4096);
            if (r.status != NaryResult::Status::Witness || !r.verified) return false;
        }
    return true;
}

// ---- criterion 8: strong-extension transitivity and sup agreement ----

bool criterion8() {
    std::mt19937 rng(1008);
    for (int t = 0; t < 50; ++t) {
        Ortholattice o0 = fixtures::random_small_ortho(rng);
        // two explicit levels on top of L0
        LatticePtr mid_extra = fixtures::random_small_lattice(rng);
        ConstructionResult hs1 = horizontal_sum(o0.lattice, mid_extra, 64);
        LatticePtr top_extra = fixtures::random_small_lattice(rng);
        ConstructionResult hs2 = horizontal_sum(hs1.lattice, top_extra, 64);

        TriangleResult t01 = require_triangle(hs1.embeddings.at("A"));
        TriangleResult t12 = require_triangle(hs2.embeddings.at("A"));
        auto comp = check_triangle(compose(t01.embedding, t12.embedding));
        if (!std::holds_alternative<TriangleResult>(comp)) return false;
        const TriangleResult& t02 = std::get<TriangleResult>(comp);
        // pi02 = pi01 . pi12
        for (ElementId y = 0; y < hs2.lattice->size(); ++y)
            if (t02.projection[y] != t01.projection[t12.projection[y]]) return false;
    }

    // sup agreement exhaustively on |target| <= 8
    std::mt19937 rng2(2008);
    int done = 0;
    while (done < 50) {
        Ortholattice o0 = fixtures::random_small_ortho(rng2);
        TriangleResult tr = fixtures::random_extension(o0, rng2, 8);
        const Embedding& e = tr.embedding;
        bool convex = std::holds_alternative<Embedding>(check_convex(e));
        for (const auto& subset : fixtures::all_subsets(e.source->size())) {
            SupAgreementReport r = sup_agreement(e, subset);
            if (!r.inequality_holds) return false;
            if (convex && r.hypotheses_apply && !r.equal) return false;
        }
        ++done;
    }
    return true;
}

// ---- criterion 9: byte-identical JSON and DOT across repeated runs ----

bool criterion9() {
    auto trace_once = [] {
        Ortholattice c2 = zoo::ortho("chain2");
        FunctionTable f = FunctionTable::total_unary(c2.lattice, {1, 0});
        PipelineTrace t = extend_pipeline(c2, f, ExtensionSource{}, 100000);
        json doc;
        doc["status"] = t.status == PipelineTrace::Status::Success ? "success" : "other";
        if (t.result) doc["result"] = ortho_to_json(*t.result);
        if (t.h) {
            doc["h"] = print_term(t.h);
            doc["h_ast"] = term_to_json(t.h);
        }
        for (const auto& s : t.stages)
            doc["stages"].push_back(json::array({s.name, s.ok, s.detail}));
        return doc.dump();
    };
    if (trace_once() != trace_once()) return false;

    auto clone_once = [] {
        Ortholattice o = zoo::ortho("B2");
        CloneTable ct = polynomial_clone(o.lattice, &o.perp, CloneMode::Ortho);
        json doc = json::array();
        for (const auto& m : ct.members)
            doc.push_back(json::array({json(m.table), print_term(m.witness)}));
        return doc.dump();
    };
    if (clone_once() != clone_once()) return false;

    for (const auto& name : zoo::ortho_names()) {
        Ortholattice o = zoo::ortho(name);
        if (export_dot(*o.lattice, &o.perp) != export_dot(*o.lattice, &o.perp))
            return false;
    }
    // seeded random instances are reproducible
    auto tower_once = [] {
        std::mt19937 rng(4242);
        Ortholattice o0 = zoo::ortho("B2");
        TriangleResult left = fixtures::random_extension(o0, rng, 12);
        ConstructionResult dc = dual_copy(left, o0);
        TriangleResult right = require_triangle_dual(dc.embeddings.at("L0"));
        ConstructionResult gl = glued_union(left, right, 64);
        return lattice_to_json(*gl.lattice).dump();
    };
    return tower_once() == tower_once();
}

}  // namespace

int main() {
    struct Criterion {
        const char* text;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {"1 glued-union characterization matches the closure oracle on 200 instances",
         criterion1},
        {"2 ortho construction satisfies the axioms and x v iota(x) = 1", criterion2},
        {"3 clone of the 2-chain is exactly 3 (lattice) / 4 (ortho) members",
         criterion3},
        {"4 diagonal pairs form an antichain with monotone lifted data", criterion4},
        {"5 pipeline succeeds on the 2-chain and never reports a false success",
         criterion5},
        {"6 normal form preserves values exhaustively over MO2 and O6", criterion6},
        {"7 n-ary reduction reproduces meet and join over powers in B2", criterion7},
        {"8 strong-extension transitivity and sup agreement", criterion8},
        {"9 repeated runs emit byte-identical JSON and DOT", criterion9},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "criterion %s threw: %s\n", c.text, e.what());
        }
        std::printf("%s criterion %s\n", ok ? "PASS" : "FAIL", c.text);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
