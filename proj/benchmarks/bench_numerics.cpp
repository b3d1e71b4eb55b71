#include <benchmark/benchmark.h>

#include "paultrap/hermite.hpp"
#include "paultrap/quadrature.hpp"
#include "paultrap/truncation.hpp"

namespace {

void BM_GaussHermiteRule(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(paultrap::gauss_hermite_rule(q));
}
BENCHMARK(BM_GaussHermiteRule)->Arg(16)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_HermiteFunction(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(paultrap::hermite_function(n, x, 1.3));
        x += 1e-3;
        if (x > 5.0) x = -5.0;
    }
}
BENCHMARK(BM_HermiteFunction)->Arg(0)->Arg(10)->Arg(100);

void BM_ValidateTruncation(benchmark::State& state) {
    paultrap::TrapConfig c;
    c.trap_frequency = 2.0;
    c.lattice_shape = 0.2;
    paultrap::ValidationOptions options;
    options.num_points = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(paultrap::validate_truncation(c, 4, options));
}
BENCHMARK(BM_ValidateTruncation)->Arg(1001)->Arg(4001)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
