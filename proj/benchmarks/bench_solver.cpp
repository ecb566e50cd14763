#include <benchmark/benchmark.h>

#include <random>

#include "pmelab/barenblatt.hpp"
#include "pmelab/measure.hpp"
#include "pmelab/solver.hpp"

using namespace pmelab;

namespace {

ScalarField bench_density(const Grid& g, double m) {
    BarenblattParams bp;
    bp.lambda = lambda_exponent(m, g.dim());
    bp.C = 1.0;
    return barenblatt_density_field(bp, m, g, 0.0);
}

void BM_StepDensity1D(benchmark::State& state) {
    const int cells = static_cast<int>(state.range(0));
    Grid g(1, -4.0, 4.0, cells);
    ScalarField rho = bench_density(g, 2.0);
    const double dt = cfl_dt(rho, 2.0, nullptr);
    const PotentialSpec phi = PotentialSpec::quadratic();
    for (auto _ : state) {
        ScalarField out = step_density(rho, phi, 2.0, dt);
        benchmark::DoNotOptimize(out.values().data());
    }
    state.SetItemsProcessed(state.iterations() * cells);
}
BENCHMARK(BM_StepDensity1D)->Arg(256)->Arg(1024)->Arg(4096);

void BM_StepDensity2D(benchmark::State& state) {
    const int cells = static_cast<int>(state.range(0));
    Grid g(2, -4.0, 4.0, cells);
    ScalarField rho = bench_density(g, 2.0);
    const double dt = cfl_dt(rho, 2.0, nullptr);
    const PotentialSpec phi = PotentialSpec::quadratic();
    for (auto _ : state) {
        ScalarField out = step_density(rho, phi, 2.0, dt);
        benchmark::DoNotOptimize(out.values().data());
    }
    state.SetItemsProcessed(state.iterations() * g.cell_count());
}
BENCHMARK(BM_StepDensity2D)->Arg(64)->Arg(128)->Arg(256);

void BM_StepSigned1D(benchmark::State& state) {
    const int cells = static_cast<int>(state.range(0));
    Grid g(1, -4.0, 4.0, cells);
    ScalarField w = bench_density(g, 1.6);
    ScalarField ws(g, FieldKind::signed_value, w.values());
    SourceTerm sink;
    sink.region = RegionBall{Pt(), 2.0};
    sink.strength = -0.01;
    const double dt = cfl_dt(ws, 1.6, nullptr);
    for (auto _ : state) {
        ScalarField out = step_signed(ws, 1.6, &sink, dt);
        benchmark::DoNotOptimize(out.values().data());
    }
    state.SetItemsProcessed(state.iterations() * cells);
}
BENCHMARK(BM_StepSigned1D)->Arg(256)->Arg(1024)->Arg(4096);

void BM_MassAndSupport(benchmark::State& state) {
    Grid g(2, -4.0, 4.0, 128);
    ScalarField rho = bench_density(g, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mass(rho));
        CellMask m = support(rho);
        benchmark::DoNotOptimize(m.count());
    }
}
BENCHMARK(BM_MassAndSupport);

void BM_DiskCellOverlapSweep(benchmark::State& state) {
    Grid g(2, -3.0, 3.0, 96);
    RegionBall ball{Pt(0.21, -0.37), 2.0};
    for (auto _ : state) {
        double total = 0.0;
        for (std::size_t c = 0; c < g.cell_count(); ++c)
            total += ball_cell_overlap(ball, 2, g.center(c), g.h());
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_DiskCellOverlapSweep);

void BM_SolveShortRun(benchmark::State& state) {
    Grid g(1, -4.0, 4.0, 512);
    ScalarField rho = bench_density(g, 2.0);
    SolverConfig cfg;
    cfg.m = 2.0;
    cfg.end_time = 0.01;
    for (auto _ : state) {
        Trajectory traj = solve(rho, cfg, PotentialSpec::quadratic());
        benchmark::DoNotOptimize(traj.stats().steps);
    }
}
BENCHMARK(BM_SolveShortRun);

} // namespace

BENCHMARK_MAIN();
