#include <benchmark/benchmark.h>

#include "smig/imaging.hpp"
#include "smig/run.hpp"

namespace {

using namespace smig;

Scene example1_scene(int grid_n) {
    RunConfig cfg = preset("example1");
    cfg.grid_n = grid_n;
    return build_scene(cfg);
}

void bm_bessel_orders(benchmark::State& state) {
    const Complex z(17.3, -1.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(bessel_j_orders(static_cast<int>(state.range(0)), z));
}
BENCHMARK(bm_bessel_orders)->Arg(30)->Arg(63)->Arg(120);

void bm_jacobi_anger(benchmark::State& state) {
    const Scene scene = example1_scene(8);
    const Wavenumbers wn = wavenumbers(scene.medium);
    const SeriesParams params{static_cast<int>(state.range(0)), 1e-10};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            jacobi_anger(scene.array, wn.kb, {0.031, -0.047}, params));
}
BENCHMARK(bm_jacobi_anger)->Arg(30)->Arg(63);

void bm_assemble_born(benchmark::State& state) {
    const Scene scene = example1_scene(8);
    const QuadratureSpec quad{static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble(scene, DataSource::born, quad));
}
BENCHMARK(bm_assemble_born)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void bm_imaging_map(benchmark::State& state) {
    const Scene scene = example1_scene(static_cast<int>(state.range(0)));
    const ScatteringMatrix k0 = mask_diagonal(
        assemble(scene, DataSource::born, QuadratureSpec{8}), Complex(0, 0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            imaging_map(scene, k0, RankStrategy::fixed(1), VectorMode::farfield));
}
BENCHMARK(bm_imaging_map)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void bm_phi_decomposition(benchmark::State& state) {
    const Scene scene = example1_scene(8);
    const SeriesParams params{static_cast<int>(state.range(0)), 1e-10};
    for (auto _ : state)
        benchmark::DoNotOptimize(phi_decomposition(
            {0.02, -0.01}, scene, Complex(0.0, 0.001), 0.02, params, QuadratureSpec{8}));
}
BENCHMARK(bm_phi_decomposition)->Arg(30)->Arg(63)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
