#include "singlet/diffusion_mc.hpp"
#include "singlet/evolution.hpp"
#include "singlet/kernel.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_EvolveSinglet(benchmark::State& state) {
    const singlet::FieldParams p{1.0, 1.0};
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(singlet::evolve_singlet(p, t));
        t += 1e-3;
    }
}
BENCHMARK(BM_EvolveSinglet);

void BM_AmplitudeViaTrace(benchmark::State& state) {
    const singlet::FieldParams p{1.0, 1.0};
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(singlet::amplitude_via_trace(p, t));
        t += 1e-3;
    }
}
BENCHMARK(BM_AmplitudeViaTrace);

void BM_LaplaceTermDirty(benchmark::State& state) {
    singlet::DirtyParams p;
    p.j = 0.5;
    const singlet::QuadratureConfig quad;
    const double R = 0.01 * static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(singlet::laplace_term_dirty(R, 1, p, quad));
}
BENCHMARK(BM_LaplaceTermDirty)->Arg(2)->Arg(100)->Arg(800);

void BM_RadialFourierClean(benchmark::State& state) {
    singlet::CleanParams p;
    p.j = 2.0;
    const singlet::QuadratureConfig quad;
    const double pm = 0.01 * static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(singlet::radial_fourier_term_clean(0, pm, p, quad));
}
BENCHMARK(BM_RadialFourierClean)->Arg(1)->Arg(100)->Arg(10000);

void BM_RadialFourierDirty(benchmark::State& state) {
    singlet::DirtyParams p;
    p.j = 2.0;
    const singlet::QuadratureConfig quad;
    const double pm = 0.01 * static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(singlet::radial_fourier_term_dirty(0, pm, p, quad));
}
BENCHMARK(BM_RadialFourierDirty)->Arg(1)->Arg(100)->Arg(10000);

void BM_DiffusionMonteCarlo(benchmark::State& state) {
    singlet::DirtyParams p;
    singlet::MCConfig mc;
    mc.n_paths = 20000;
    for (int i = 0; i <= 20; ++i) mc.bin_edges.push_back(0.25 * i);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(singlet::mc_diffusion_correlator(1.0, p, mc, threads));
    state.SetItemsProcessed(state.iterations() * mc.n_paths);
}
BENCHMARK(BM_DiffusionMonteCarlo)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
