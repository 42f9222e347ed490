#include "olat/interpolation.hpp"

#include <algorithm>
#include <stdexcept>

namespace olat {

FunctionTable FunctionTable::total_unary(LatticePtr l, std::vector<ElementId> values) {
    if (static_cast<int>(values.size()) != l->size())
        throw std::invalid_argument("value vector does not match lattice size");
    FunctionTable f;
    f.arity = 1;
    f.domain = std::move(l);
    for (ElementId x = 0; x < static_cast<int>(values.size()); ++x)
        f.entries[{x}] = values[x];
    return f;
}

FunctionTable FunctionTable::partial_unary(
    LatticePtr l, const std::vector<std::pair<ElementId, ElementId>>& pairs) {
    FunctionTable f;
    f.arity = 1;
    f.domain = std::move(l);
    for (auto [x, y] : pairs) f.entries[{x}] = y;
    return f;
}

bool FunctionTable::total_on(const FiniteLattice& l) const {
    if (arity != 1) return false;
    return static_cast<int>(entries.size()) == l.size();
}

std::optional<ElementId> FunctionTable::at(ElementId x) const {
    auto it = entries.find({x});
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

MonotoneReport monotone_check(const FunctionTable& f) {
    const auto& L = *f.domain;
    for (const auto& [a, fa] : f.entries)
        for (const auto& [b, fb] : f.entries) {
            bool le = true;
            for (int i = 0; i < f.arity && le; ++i) le = L.leq(a[i], b[i]);
            if (le && !L.leq(fa, fb))
                return MonotoneReport{false, std::make_pair(a, b)};
        }
    return MonotoneReport{};
}

const CloneMember* CloneTable::find(const std::vector<ElementId>& table) const {
    auto it = index.find(table);
    if (it == index.end()) return nullptr;
    return &members[it->second];
}

namespace {

// Layered BFS over unary function tables, graded by term size. Within a
// layer ties are broken lexicographically on the printed form, so the
// witness attached to each member is deterministic across runs.
class ClosureEngine {
public:
    ClosureEngine(LatticePtr lat, const std::vector<ElementId>* perp, CloneMode mode,
                  long budget)
        : budget_(budget) {
        if (mode == CloneMode::Ortho && perp == nullptr)
            throw std::invalid_argument("Ortho mode needs a perp table");
        ct_.lattice = std::move(lat);
        ct_.mode = mode;
        if (perp) ct_.perp = *perp;
        ct_.coeffs = coeff_binding_for(*ct_.lattice);
    }

    // after_layer may stop the search early (e.g. a witness was found).
    CloneTable run(const std::function<bool(const CloneTable&)>& after_layer) {
        const int n = ct_.lattice->size();
        std::vector<std::pair<std::vector<ElementId>, TermPtr>> cands;
        std::vector<ElementId> ident(n);
        for (int i = 0; i < n; ++i) ident[i] = i;
        cands.emplace_back(std::move(ident), tvar(0));
        for (ElementId c = 0; c < n; ++c)
            cands.emplace_back(std::vector<ElementId>(n, c),
                               tcoeff(coeff_name_for(*ct_.lattice, c)));
        if (!process_layer(1, cands)) return finish();
        if (after_layer && after_layer(ct_)) {
            ct_.complete = false;
            return finish();
        }

        for (int s = 2; s <= kMaxTermSize; ++s) {
            cands.clear();
            collect_candidates(s, cands);
            std::size_t before = ct_.members.size();
            if (!process_layer(s, cands)) return finish();
            if (after_layer && after_layer(ct_)) {
                ct_.complete = false;
                return finish();
            }
            if (ct_.members.size() == before && is_closed()) {
                ct_.complete = true;
                return finish();
            }
        }
        ct_.complete = false;
        return finish();
    }

private:
    static constexpr int kMaxTermSize = 10000;

    CloneTable finish() { return std::move(ct_); }

    bool use_perp() const { return ct_.mode == CloneMode::Ortho; }

    std::vector<ElementId> op_table(TermKind k, const std::vector<ElementId>& a,
                                    const std::vector<ElementId>& b) const {
        const auto& L = *ct_.lattice;
        std::vector<ElementId> t(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            t[i] = k == TermKind::Meet ? L.meet(a[i], b[i]) : L.join(a[i], b[i]);
        return t;
    }

    void collect_candidates(int s,
                            std::vector<std::pair<std::vector<ElementId>, TermPtr>>& out) {
        if (use_perp() && s - 1 < static_cast<int>(buckets_.size())) {
            for (std::size_t idx : buckets_[s - 1]) {
                const auto& m = ct_.members[idx];
                std::vector<ElementId> t(m.table.size());
                for (std::size_t i = 0; i < t.size(); ++i) t[i] = (*ct_.perp)[m.table[i]];
                out.emplace_back(std::move(t), tperp(m.witness));
            }
        }
        for (int sa = 1; sa <= (s - 1) / 2; ++sa) {
            int sb = s - 1 - sa;
            if (sa >= static_cast<int>(buckets_.size()) ||
                sb >= static_cast<int>(buckets_.size()))
                continue;
            for (std::size_t ia : buckets_[sa])
                for (std::size_t ib : buckets_[sb]) {
                    if (sa == sb && ib <= ia) continue;
                    add_pair(ct_.members[ia], ct_.members[ib], out);
                }
        }
    }

    void add_pair(const CloneMember& a, const CloneMember& b,
                  std::vector<std::pair<std::vector<ElementId>, TermPtr>>& out) {
        // Operands ordered by printed form, so commuting pairs collapse.
        const CloneMember* lo = &a;
        const CloneMember* hi = &b;
        if (print_term(b.witness) < print_term(a.witness)) std::swap(lo, hi);
        out.emplace_back(op_table(TermKind::Meet, lo->table, hi->table),
                         tmeet(lo->witness, hi->witness));
        out.emplace_back(op_table(TermKind::Join, lo->table, hi->table),
                         tjoin(lo->witness, hi->witness));
    }

    // Returns false when the budget was exhausted.
    bool process_layer(int s,
                       std::vector<std::pair<std::vector<ElementId>, TermPtr>>& cands) {
        std::map<std::vector<ElementId>, std::pair<std::string, TermPtr>> fresh;
        for (auto& [tab, term] : cands) {
            if (ct_.index.count(tab)) continue;
            std::string printed = print_term(term);
            auto it = fresh.find(tab);
            if (it == fresh.end() || printed < it->second.first)
                fresh[tab] = {std::move(printed), term};
        }
        std::vector<std::pair<std::string, std::vector<ElementId>>> order;
        order.reserve(fresh.size());
        for (auto& [tab, pt] : fresh) order.emplace_back(pt.first, tab);
        std::sort(order.begin(), order.end());

        if (static_cast<int>(buckets_.size()) <= s) buckets_.resize(s + 1);
        for (auto& [printed, tab] : order) {
            if (static_cast<long>(ct_.members.size()) >= budget_) {
                ct_.complete = false;
                return false;
            }
            ct_.index[tab] = ct_.members.size();
            buckets_[s].push_back(ct_.members.size());
            ct_.members.push_back(CloneMember{tab, fresh[tab].second});
        }
        return true;
    }

    bool is_closed() const {
        const std::size_t m = ct_.members.size();
        if (use_perp()) {
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<ElementId> t(ct_.members[i].table.size());
                for (std::size_t k = 0; k < t.size(); ++k)
                    t[k] = (*ct_.perp)[ct_.members[i].table[k]];
                if (!ct_.index.count(t)) return false;
            }
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                if (!ct_.index.count(
                        op_table(TermKind::Meet, ct_.members[i].table, ct_.members[j].table)))
                    return false;
                if (!ct_.index.count(
                        op_table(TermKind::Join, ct_.members[i].table, ct_.members[j].table)))
                    return false;
            }
        return true;
    }

    long budget_;
    CloneTable ct_;
    std::vector<std::vector<std::size_t>> buckets_;
};

bool member_matches(const CloneMember& m, const FunctionTable& f) {
    for (const auto& [key, value] : f.entries)
        if (m.table[key[0]] != value) return false;
    return true;
}

InterpolationResult constant_bottom_witness(const FiniteLattice& l,
                                            const CoeffBinding& coeffs) {
    InterpolationResult r;
    r.status = InterpolationResult::Status::Witness;
    r.term = tcoeff(coeff_name_for(l, l.bottom()));
    r.coeffs = coeffs;
    r.table.assign(l.size(), l.bottom());
    return r;
}

}  // namespace

CloneTable polynomial_clone(LatticePtr lattice, const std::vector<ElementId>* perp,
                            CloneMode mode, long budget) {
    ClosureEngine engine(std::move(lattice), perp, mode, budget);
    return engine.run(nullptr);
}

std::vector<InterpolationResult> interpolate_many(
    LatticePtr lattice, const std::vector<ElementId>* perp, CloneMode mode,
    std::span<const FunctionTable> fns, long budget) {
    std::vector<InterpolationResult> results(fns.size());
    std::vector<bool> pending(fns.size(), true);

    // Degenerate inputs get the canonical constant-bottom witness.
    CoeffBinding binding = coeff_binding_for(*lattice);
    for (std::size_t i = 0; i < fns.size(); ++i) {
        if (fns[i].arity != 1)
            throw std::invalid_argument("interpolate_unary needs unary tables");
        if (fns[i].entries.empty()) {
            results[i] = constant_bottom_witness(*lattice, binding);
            pending[i] = false;
        }
    }
    if (std::none_of(pending.begin(), pending.end(), [](bool b) { return b; }))
        return results;

    auto all_matched = [&](const CloneTable& ct) {
        bool all = true;
        for (std::size_t i = 0; i < fns.size(); ++i) {
            if (!pending[i]) continue;
            bool found = false;
            for (const auto& m : ct.members)
                if (member_matches(m, fns[i])) { found = true; break; }
            all &= found;
        }
        return all;
    };

    ClosureEngine engine(lattice, perp, mode, budget);
    CloneTable ct = engine.run(all_matched);

    for (std::size_t i = 0; i < fns.size(); ++i) {
        if (!pending[i]) continue;
        InterpolationResult& r = results[i];
        // Discovery order is (size, lexicographic print), so the first
        // match is the canonical shortest witness.
        for (const auto& m : ct.members) {
            if (member_matches(m, fns[i])) {
                r.status = InterpolationResult::Status::Witness;
                r.term = m.witness;
                r.coeffs = ct.coeffs;
                r.table = m.table;
                break;
            }
        }
        if (r.status != InterpolationResult::Status::Witness)
            r.status = ct.complete ? InterpolationResult::Status::NotRepresentable
                                   : InterpolationResult::Status::Unknown;
    }
    return results;
}

InterpolationResult interpolate_unary(LatticePtr lattice,
                                      const std::vector<ElementId>* perp,
                                      CloneMode mode, const FunctionTable& f,
                                      long budget) {
    std::vector<FunctionTable> fns{f};
    return interpolate_many(std::move(lattice), perp, mode, fns, budget)[0];
}

AntichainLift antichain_lift(const Ortholattice& o0, const FunctionTable& f,
                             int size_cap) {
    const auto& L0 = *o0.lattice;
    const int n = L0.size();

    ConstructionResult prod = product(o0.lattice, o0.lattice, size_cap);
    ConstructionResult hs = horizontal_sum(o0.lattice, prod.lattice, size_cap);

    AntichainLift lift;
    lift.prod = prod.lattice;
    lift.lprime = hs.lattice;
    lift.base_embed = hs.embeddings.at("A");
    lift.prod_embed = hs.embeddings.at("B");

    auto pair_id = [&](ElementId x, ElementId y) {
        return lift.prod_embed.map[x * n + y];
    };

    for (ElementId x = 0; x < n; ++x)
        lift.antichain.push_back(pair_id(x, o0.perp[x]));
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = x + 1; y < n; ++y) {
            ElementId a = lift.antichain[x], b = lift.antichain[y];
            if (lift.lprime->leq(a, b) || lift.lprime->leq(b, a))
                throw std::logic_error("diagonal pairs are not an antichain");
        }

    lift.fbar.domain = lift.g1.domain = lift.g2.domain = lift.lprime;
    for (const auto& [key, value] : f.entries)
        lift.fbar.entries[{lift.antichain[key[0]]}] = lift.base_embed.map[value];
    for (ElementId x = 0; x < n; ++x) {
        lift.g1.entries[{lift.base_embed.map[x]}] = pair_id(x, L0.bottom());
        lift.g2.entries[{lift.base_embed.map[x]}] = pair_id(L0.bottom(), x);
    }

    if (!monotone_check(lift.fbar).monotone || !monotone_check(lift.g1).monotone ||
        !monotone_check(lift.g2).monotone)
        throw std::logic_error("lifted partial functions must be monotone");
    return lift;
}

namespace {

FunctionTable transport_table(const FunctionTable& f, const Embedding& e) {
    FunctionTable out;
    out.arity = f.arity;
    out.domain = e.target;
    for (const auto& [key, value] : f.entries) {
        std::vector<ElementId> k = key;
        for (auto& x : k) x = e.map[x];
        out.entries[k] = e.map[value];
    }
    return out;
}

}  // namespace

PipelineTrace extend_pipeline(const Ortholattice& o0, const FunctionTable& f,
                              const ExtensionSource& source, long budget) {
    PipelineTrace trace;
    auto stage = [&](const std::string& name, bool ok, std::string detail = "") {
        trace.stages.push_back(PipelineStage{name, ok, std::move(detail)});
    };
    auto fail = [&](PipelineTrace::Status st, const std::string& why) {
        trace.status = st;
        trace.failure = why;
        return trace;
    };

    AntichainLift lift;
    try {
        lift = antichain_lift(o0, f, source.size_cap);
    } catch (const std::exception& ex) {
        stage("antichain_lift", false, ex.what());
        return fail(PipelineTrace::Status::StageFailed, ex.what());
    }
    trace.lprime = lift.lprime;
    stage("antichain_lift", true,
          "|L0'| = " + std::to_string(lift.lprime->size()));

    // Candidate extensions for the interpolation step.
    std::vector<std::pair<LatticePtr, Embedding>> candidates;
    if (source.supplied) {
        Embedding e = source.supplied->second;
        if (!e.has(Cert::Triangle)) {
            stage("extension", false, "supplied embedding lacks Triangle certificate");
            return fail(PipelineTrace::Status::StageFailed,
                        "PreconditionNotCertified: supplied extension");
        }
        if (e.source->size() != lift.lprime->size() ||
            !(e.source->order() == lift.lprime->order())) {
            stage("extension", false, "supplied embedding source is not L0'");
            return fail(PipelineTrace::Status::StageFailed,
                        "supplied embedding source is not L0'");
        }
        e.source = lift.lprime;
        candidates.emplace_back(source.supplied->first, std::move(e));
    } else {
        LatticePtr cur = lift.lprime;
        Embedding emb = require_triangle(identity_embedding(cur)).embedding;
        candidates.emplace_back(cur, emb);
        for (int step = 0; step < source.search_steps; ++step) {
            try {
                ConstructionResult hs = horizontal_sum(cur, lift.prod, source.size_cap);
                emb = require_triangle(compose(emb, hs.embeddings.at("A"))).embedding;
                cur = hs.lattice;
                candidates.emplace_back(cur, emb);
            } catch (const ConstructionError&) {
                break;
            }
        }
    }
    stage("extension", true,
          std::to_string(candidates.size()) + " candidate extension(s)");

    for (const auto& [l1, emb] : candidates) {
        std::vector<FunctionTable> fns{transport_table(lift.fbar, emb),
                                       transport_table(lift.g1, emb),
                                       transport_table(lift.g2, emb)};
        auto results = interpolate_many(l1, nullptr, CloneMode::LatticeOnly, fns, budget);
        bool all = std::all_of(results.begin(), results.end(), [](const auto& r) {
            return r.status == InterpolationResult::Status::Witness;
        });
        if (!all) continue;

        trace.extension = l1;
        trace.p = results[0].term;
        trace.q1 = results[1].term;
        trace.q2 = results[2].term;
        stage("told", true, "p, q1, q2 found over |L1| = " + std::to_string(l1->size()));

        try {
            TriangleResult tr01 = require_triangle(compose(lift.base_embed, emb));
            ConstructionResult oc = ortho_construction(tr01, o0, source.size_cap);
            trace.result = oc.ortho;
            trace.base_into_result = oc.embeddings.at("L0");
            stage("ortho", true, "|L| = " + std::to_string(oc.lattice->size()));

            CoeffBinding binding = transport(results[0].coeffs, oc.embeddings.at("L1"));
            std::vector<TermPtr> inner_repl{tperp(tvar(0))};
            TermPtr inner = tjoin(trace.q1, subst_vars(trace.q2, inner_repl));
            std::vector<TermPtr> outer_repl{inner};
            trace.h = subst_vars(trace.p, outer_repl);
            trace.h_coeffs = binding;
            stage("assemble", true, print_term(trace.h));

            EvalContext ctx = eval_context(*trace.result, trace.h_coeffs);
            const Embedding& e0 = trace.base_into_result;
            bool ok = true;
            for (const auto& [key, value] : f.entries) {
                ElementId in[1] = {e0.map[key[0]]};
                if (eval(trace.h, ctx, in) != e0.map[value]) { ok = false; break; }
            }
            trace.verified = ok;
            stage("verify", ok, ok ? "h agrees with f on dom(f)" : "h disagrees with f");
            if (!ok)
                return fail(PipelineTrace::Status::StageFailed,
                            "assembled polynomial disagrees with f");
            trace.status = PipelineTrace::Status::Success;
            return trace;
        } catch (const std::exception& ex) {
            stage("ortho", false, ex.what());
            return fail(PipelineTrace::Status::StageFailed, ex.what());
        }
    }
    stage("told", false, "no interpolating p, q1, q2 within budget");
    return fail(PipelineTrace::Status::ToldStepFailed,
                "no interpolating polynomials found over the candidate extensions");
}

NaryResult nary_reduce(LatticePtr base, const std::vector<ElementId>* base_perp,
                       CloneMode mode, const FunctionTable& g, long budget,
                       int size_cap, int generation_cap) {
    NaryResult out;
    if (g.arity == 1) {
        InterpolationResult r = interpolate_unary(base, base_perp, mode, g, budget);
        out.ambient = base;
        out.base_into_ambient = require_sub01(identity_embedding(base));
        if (r.status == InterpolationResult::Status::Witness) {
            out.status = NaryResult::Status::Witness;
            out.term = r.term;
            out.coeffs = r.coeffs;
            out.verified = true;
            for (const auto& [key, value] : g.entries)
                if (r.table[key[0]] != value) out.verified = false;
        } else {
            out.detail = "unary interpolation gave no witness";
        }
        return out;
    }

    const auto& L = *base;
    const int n = g.arity;

    // Sub(ortho)lattice generated by the coordinates of dom(g).
    std::vector<char> in_s(L.size(), 0);
    in_s[L.bottom()] = in_s[L.top()] = 1;
    for (const auto& [key, value] : g.entries)
        for (ElementId x : key) in_s[x] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<ElementId> cur;
        for (ElementId x = 0; x < L.size(); ++x)
            if (in_s[x]) cur.push_back(x);
        if (static_cast<int>(cur.size()) > generation_cap)
            throw ConstructionError(ConstructionError::Kind::GenerationTooLarge,
                                    "generated sublattice exceeds cap");
        for (ElementId x : cur)
            for (ElementId y : cur) {
                if (!in_s[L.meet(x, y)]) { in_s[L.meet(x, y)] = 1; grew = true; }
                if (!in_s[L.join(x, y)]) { in_s[L.join(x, y)] = 1; grew = true; }
            }
        if (mode == CloneMode::Ortho && base_perp)
            for (ElementId x : cur)
                if (!in_s[(*base_perp)[x]]) { in_s[(*base_perp)[x]] = 1; grew = true; }
    }
    std::vector<ElementId> s_elems;
    for (ElementId x = 0; x < L.size(); ++x)
        if (in_s[x]) s_elems.push_back(x);

    const std::vector<ElementId>* perp_arg =
        (mode == CloneMode::Ortho) ? base_perp : nullptr;
    PowerWitness pw = power_witness(base, s_elems, n, perp_arg, size_cap);

    std::vector<ElementId> sub_id(L.size(), -1);
    for (std::size_t i = 0; i < pw.sub_elements.size(); ++i)
        sub_id[pw.sub_elements[i]] = static_cast<ElementId>(i);
    const ElementId s_bottom = sub_id[L.bottom()];

    // f per the tuple identification, plus the coordinate injections.
    std::vector<FunctionTable> fns(1 + n);
    for (auto& t : fns) t.domain = pw.ambient;
    for (const auto& [key, value] : g.entries) {
        std::vector<ElementId> tup(n);
        for (int i = 0; i < n; ++i) {
            if (sub_id[key[i]] == -1)
                throw std::logic_error("domain coordinate escaped the generated sublattice");
            tup[i] = sub_id[key[i]];
        }
        fns[0].entries[{pw.power_into_ambient.map[pw.tuple_id(tup)]}] =
            pw.base_into_ambient.map[value];
    }
    for (int l = 0; l < n; ++l)
        for (ElementId s : pw.sub_elements) {
            std::vector<ElementId> tup(n, s_bottom);
            tup[l] = sub_id[s];
            fns[1 + l].entries[{pw.base_into_ambient.map[s]}] =
                pw.power_into_ambient.map[pw.tuple_id(tup)];
        }

    const std::vector<ElementId>* ambient_perp =
        pw.ambient_perp ? &*pw.ambient_perp : nullptr;
    auto results = interpolate_many(pw.ambient, ambient_perp, mode, fns, budget);

    out.ambient = pw.ambient;
    out.base_into_ambient = pw.base_into_ambient;
    for (const auto& r : results) {
        if (r.status != InterpolationResult::Status::Witness) {
            out.status = NaryResult::Status::Unknown;
            out.detail = r.status == InterpolationResult::Status::NotRepresentable
                             ? "not representable over the constructed ambient"
                             : "closure budget exhausted";
            return out;
        }
    }

    // p(i1(x1) v ... v in(xn)) with coordinate terms substituted in.
    TermPtr inner;
    for (int l = 0; l < n; ++l) {
        std::vector<TermPtr> repl{tvar(l)};
        TermPtr ql = subst_vars(results[1 + l].term, repl);
        inner = inner ? tjoin(inner, ql) : ql;
    }
    std::vector<TermPtr> outer{inner};
    out.term = subst_vars(results[0].term, outer);
    out.coeffs = results[0].coeffs;
    out.status = NaryResult::Status::Witness;

    EvalContext ctx{pw.ambient.get(), ambient_perp, &out.coeffs};
    out.verified = true;
    for (const auto& [key, value] : g.entries) {
        std::vector<ElementId> assignment(n);
        for (int i = 0; i < n; ++i) assignment[i] = pw.base_into_ambient.map[key[i]];
        if (eval(out.term, ctx, assignment) != pw.base_into_ambient.map[value])
            out.verified = false;
    }
    if (!out.verified) {
        out.status = NaryResult::Status::Unknown;
        out.detail = "assembled term failed verification";
    }
    return out;
}

CoverageReport iterate_cover(const Ortholattice& o0,
                             std::span<const FunctionTable> targets,
                             long step_budget, int size_cap) {
    CoverageReport report;
    report.entries.resize(targets.size());

    Ortholattice cur = o0;
    Embedding u = require_sub01(identity_embedding(o0.lattice));

    for (std::size_t i = 0; i < targets.size(); ++i) {
        const FunctionTable& f = targets[i];
        FunctionTable lifted = transport_table(f, u);
        CoverageEntry& entry = report.entries[i];

        InterpolationResult direct = interpolate_unary(
            cur.lattice, &cur.perp, CloneMode::Ortho, lifted, step_budget);
        if (direct.status == InterpolationResult::Status::Witness) {
            entry.covered = true;
            entry.term = direct.term;
            entry.coeffs = direct.coeffs;
            continue;
        }

        ExtensionSource src;
        src.size_cap = size_cap;
        PipelineTrace trace = extend_pipeline(cur, lifted, src, step_budget);
        if (trace.status != PipelineTrace::Status::Success) continue;

        // The lattice grew: rebase everything recorded so far.
        const Embedding& grow = trace.base_into_result;
        for (auto& e : report.entries)
            if (e.covered) e.coeffs = transport(e.coeffs, grow);
        u = compose(u, grow);
        cur = *trace.result;

        entry.covered = true;
        entry.term = trace.h;
        entry.coeffs = trace.h_coeffs;
    }

    // Re-verify every witness against the final lattice.
    for (std::size_t i = 0; i < targets.size(); ++i) {
        CoverageEntry& entry = report.entries[i];
        if (!entry.covered) continue;
        EvalContext ctx = eval_context(cur, entry.coeffs);
        entry.verified = true;
        for (const auto& [key, value] : targets[i].entries) {
            ElementId in[1] = {u.map[key[0]]};
            if (eval(entry.term, ctx, in) != u.map[value]) entry.verified = false;
        }
    }

    report.final_lattice = cur;
    report.base_into_final = u;
    report.final_size = cur.size();
    return report;
}

}  // namespace olat
