#include <benchmark/benchmark.h>

#include "pslet/oracle.hpp"
#include "pslet/pade.hpp"
#include "pslet/spectrum.hpp"

using namespace pslet;

namespace {

void BM_plateau_solve(benchmark::State& state)
{
    const DonorPotential p(1.0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(solve_plateau(p, 0, 0));
}
BENCHMARK(BM_plateau_solve);

void BM_hierarchy(benchmark::State& state)
{
    const DonorPotential p(1.0, 1);
    const int n_rho = static_cast<int>(state.range(0));
    const PlateauGeometry g = solve_plateau(p, n_rho, 0);
    SeriesOptions opts;
    opts.extended_precision = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(solve_hierarchy(p, g, n_rho, opts));
}
BENCHMARK(BM_hierarchy)
    ->ArgsProduct({{0, 2}, {0, 1}})
    ->ArgNames({"n_rho", "dd"})
    ->Unit(benchmark::kMicrosecond);

void BM_pipeline_point(benchmark::State& state)
{
    const DonorPotential p(0.5, 1);
    const StateLabel s(1, -2);
    for (auto _ : state) benchmark::DoNotOptimize(epsilon_pslet(p, s));
}
BENCHMARK(BM_pipeline_point)->Unit(benchmark::kMicrosecond);

void BM_pade_44(benchmark::State& state)
{
    const std::vector<double> series = {-0.22, -0.41, -0.79, -1.55, -3.02,
                                        -5.75, -10.6, -18.6, -30.4};
    for (auto _ : state) benchmark::DoNotOptimize(pade_from_series(series, 4, 4));
}
BENCHMARK(BM_pade_44);

void BM_oracle_shot(benchmark::State& state)
{
    const DonorPotential p(1.0, 1);
    const StateLabel s(0, 0);
    ShootingConfig cfg;
    cfg.step_count = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(shoot(p, s, cfg));
}
BENCHMARK(BM_oracle_shot)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_table_row(benchmark::State& state)
{
    // one gamma across the seven reference states
    const char* families[] = {"1s", "2p", "2s", "3d", "3p", "3s", "4d"};
    for (auto _ : state) {
        double acc = 0.0;
        for (const char* f : families)
            acc += epsilon_pslet(DonorPotential(0.7, 1), StateLabel::parse(f)).epsilon;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_table_row)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
