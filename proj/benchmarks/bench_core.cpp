#include <benchmark/benchmark.h>

#include "casinet/force.hpp"
#include "casinet/noise.hpp"

using namespace casinet;

namespace {

const double kGoldOmegaP = 1.3850379171388627e16;

TransverseMode imode(double xi, double k, Polarization p) {
    return TransverseMode::make(FrequencyPoint::imaginary(xi), k, p);
}

void BM_BulkReflection(benchmark::State& state) {
    const MediumModel gold = Plasma(kGoldOmegaP);
    const auto mode = imode(8e14, 3e6, Polarization::TM);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bulk_reflection(gold, mode));
    }
}
BENCHMARK(BM_BulkReflection);

void BM_StackScattering(benchmark::State& state) {
    LayerStack stack;
    for (int i = 0; i < state.range(0); ++i)
        stack.layers.push_back({i % 2 == 0 ? MediumModel(Drude(kGoldOmegaP, 5.32e13))
                                           : MediumModel(Dielectric(4.0)),
                                20e-9});
    const auto mode = imode(8e14, 3e6, Polarization::TM);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stack_scattering(stack, mode));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StackScattering)->RangeMultiplier(2)->Range(1, 16)->Complexity();

void BM_CavityMatrix(benchmark::State& state) {
    const complexd rbar1(-0.7, 0.1), r2(-0.6, -0.2), a1(0.3, 1.1), a2(0.2, -0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cavity_matrix(rbar1, r2, a1, a2));
    }
}
BENCHMARK(BM_CavityMatrix);

void BM_ForceIdeal(benchmark::State& state) {
    CavityConfig cfg{PerfectMirror{}, PerfectMirror{}, 1e-6, 1e-4, QuadratureSpec{}};
    cfg.quadrature.rel_tol = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(force(cfg));
    }
}
BENCHMARK(BM_ForceIdeal)->Unit(benchmark::kMillisecond);

void BM_ForcePlasmaBulk(benchmark::State& state) {
    const MediumModel gold = Plasma(kGoldOmegaP);
    CavityConfig cfg{BulkMirror{gold}, BulkMirror{gold}, 5e-7, 1e-4, QuadratureSpec{}};
    cfg.quadrature.rel_tol = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(force(cfg));
    }
}
BENCHMARK(BM_ForcePlasmaBulk)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
