#include <benchmark/benchmark.h>

#include "paultrap/eigenstate.hpp"
#include "paultrap/measures.hpp"
#include "paultrap/sweep.hpp"

namespace {

paultrap::EffectiveOscillator oscillator() {
    paultrap::TrapConfig c;
    c.trap_frequency = 1.5;
    c.lattice_shape = 0.4;
    return paultrap::EffectiveOscillator(c);
}

void BM_ClosedFormMeasures(benchmark::State& state) {
    const auto eff = oscillator();
    for (auto _ : state) benchmark::DoNotOptimize(paultrap::closed_form_measures(eff, 3));
}
BENCHMARK(BM_ClosedFormMeasures);

void BM_QuadratureMeasures(benchmark::State& state) {
    const paultrap::Eigenstate s(oscillator(), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(paultrap::quadrature_measures(s));
}
BENCHMARK(BM_QuadratureMeasures)->Arg(0)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_EntropyScheme(benchmark::State& state) {
    const paultrap::Eigenstate s(oscillator(), 5);
    const auto scheme = state.range(0) == 0 ? paultrap::QuadratureScheme::gauss_hermite
                                            : paultrap::QuadratureScheme::trapezoid;
    for (auto _ : state) benchmark::DoNotOptimize(paultrap::shannon_numeric(s, scheme));
}
BENCHMARK(BM_EntropyScheme)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Table1Sweep(benchmark::State& state) {
    const auto spec = paultrap::table1_spec(paultrap::Table1Block::kappa_sweep);
    for (auto _ : state) benchmark::DoNotOptimize(paultrap::run_sweep(spec));
}
BENCHMARK(BM_Table1Sweep)->Unit(benchmark::kMicrosecond);

}  // namespace
