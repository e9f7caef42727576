#include <benchmark/benchmark.h>

#include "lagwave/background.hpp"
#include "lagwave/burgers.hpp"
#include "lagwave/checks.hpp"
#include "lagwave/contact_wave.hpp"
#include "lagwave/riemann.hpp"
#include "lagwave/solver.hpp"

namespace {

using namespace lagwave;

void bm_burgers_evaluate(benchmark::State& state) {
    const burgers::BurgersData d{-0.5, 0.5};
    double x = -30.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(burgers::evaluate(x, 100.0, d));
        x += 0.01;
        if (x > 30.0) x = -30.0;
    }
}
BENCHMARK(bm_burgers_evaluate);

void bm_contact_profile(benchmark::State& state) {
    const euler::GasParams g;
    const contact::ContactWaveSpec spec{1.0, 1.1, 1.0, 0.0};
    const auto prof = contact::solve_selfsimilar(spec, g);
    double x = -50.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(contact::contact_profile(x, 50.0, prof, spec, g));
        x += 0.01;
        if (x > 50.0) x = -50.0;
    }
}
BENCHMARK(bm_contact_profile);

void bm_composite_point(benchmark::State& state) {
    const app::Scenario sc = checks::canonical_composite_scenario();
    const composite::CompositeWave wave(sc.left, sc.right, sc.gas);
    double x = -300.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wave.at(x, 100.0));
        x += 0.05;
        if (x > 300.0) x = -300.0;
    }
}
BENCHMARK(bm_composite_point);

void bm_riemann_solve(benchmark::State& state) {
    const euler::GasParams g;
    const euler::FluidState left{0.9, -0.05, 1.05}, right{1.05, 0.08, 1.1};
    for (auto _ : state)
        benchmark::DoNotOptimize(euler::solve_intermediate_states(left, right, g));
}
BENCHMARK(bm_riemann_solve);

void bm_solver_rhs(benchmark::State& state) {
    app::Scenario sc = checks::canonical_contact_scenario();
    sc.grid.n = static_cast<int>(state.range(0));
    checks::ScenarioRun run(sc);
    sim::State s = run.state();
    sim::Tendencies k;
    k.resize(s.n());
    for (auto _ : state) {
        run.solver().rhs(s, s.t, k);
        benchmark::DoNotOptimize(k);
    }
    state.SetItemsProcessed(state.iterations() * sc.grid.n);
}
BENCHMARK(bm_solver_rhs)->Arg(1024)->Arg(4096);

void bm_solver_step(benchmark::State& state) {
    app::Scenario sc = checks::canonical_contact_scenario();
    sc.grid.n = static_cast<int>(state.range(0));
    checks::ScenarioRun run(sc);
    sim::State s = run.state();
    const double dt = 0.5 * run.solver().stable_dt(s);
    for (auto _ : state) run.solver().step(s, dt);
    state.SetItemsProcessed(state.iterations() * sc.grid.n);
}
BENCHMARK(bm_solver_step)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
