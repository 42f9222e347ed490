#include <benchmark/benchmark.h>

#include "olat/constructions.hpp"
#include "olat/lattice.hpp"
#include "olat/ortho.hpp"

namespace {

olat::LatticePtr boolean_power(int k) {
    using namespace olat;
    LatticePtr l = std::make_shared<const FiniteLattice>(zoo::lattice("chain2"));
    for (int i = 0; i < k; ++i) l = product(l, l, 1 << 20).lattice;
    return l;
}

void BM_validate(benchmark::State& state) {
    using namespace olat;
    LatticePtr l = boolean_power(static_cast<int>(state.range(0)));
    Poset p = l->as_poset();
    for (auto _ : state) {
        auto res = validate_lattice(p);
        benchmark::DoNotOptimize(res);
    }
    state.SetLabel(std::to_string(l->size()) + " elements");
}
BENCHMARK(BM_validate)->Arg(1)->Arg(2)->Arg(3);

void BM_glued_union(benchmark::State& state) {
    using namespace olat;
    Ortholattice o0 = zoo::ortho("B2");
    ConstructionResult prod = product(o0.lattice, o0.lattice, 1 << 20);
    ConstructionResult hs = horizontal_sum(o0.lattice, prod.lattice, 1 << 20);
    TriangleResult left = require_triangle(hs.embeddings.at("A"));
    for (auto _ : state) {
        ConstructionResult oc = ortho_construction(left, o0, 1 << 20);
        benchmark::DoNotOptimize(oc);
    }
}
BENCHMARK(BM_glued_union);

}  // namespace
