#include <benchmark/benchmark.h>

#include "olat/interpolation.hpp"
#include "olat/ortho.hpp"

namespace {

void BM_clone(benchmark::State& state) {
    using namespace olat;
    Ortholattice o = zoo::ortho(state.range(0) == 0 ? "chain2" : "B2");
    CloneMode mode = state.range(1) == 0 ? CloneMode::LatticeOnly : CloneMode::Ortho;
    for (auto _ : state) {
        CloneTable ct = polynomial_clone(o.lattice, &o.perp, mode, 1 << 20);
        benchmark::DoNotOptimize(ct);
        state.counters["members"] = static_cast<double>(ct.members.size());
    }
}
BENCHMARK(BM_clone)->Args({0, 0})->Args({0, 1})->Args({1, 0})->Args({1, 1});

}  // namespace

BENCHMARK_MAIN();
