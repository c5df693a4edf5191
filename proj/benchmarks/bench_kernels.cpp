// Microbenchmarks for the kernels that dominate a solve: ghost padding,
// the one-sided derivative schemes, the Lax-Friedrichs term, and one RK3
// step of the two reference problems.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>

#include "levelset/grid.hpp"
#include "levelset/hamiltonian.hpp"
#include "levelset/integrator.hpp"
#include "levelset/reachability.hpp"
#include "levelset/spatial_derivatives.hpp"

using namespace levelset;

namespace {

ScalarField random_field(GridPtr grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ScalarField f(grid);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = dist(rng);
    return f;
}

GridPtr cube_grid(int n) {
    return Grid::create({-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}, {n, n, n}, {2});
}

void bench_pad_ghost(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ScalarField v = random_field(cube_grid(n), 1);
    for (auto _ : state) {
        PaddedField padded = pad_ghost(v, 1, 3);
        benchmark::DoNotOptimize(padded.data.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(v.size()));
}

void bench_derivative(benchmark::State& state, DerivativeScheme scheme) {
    const int n = static_cast<int>(state.range(0));
    const ScalarField v = random_field(cube_grid(n), 2);
    for (auto _ : state) {
        DerivativePair d = upwind_derivative(v, 0, scheme);
        benchmark::DoNotOptimize(d.left.values().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(v.size()));
}

void bench_first(benchmark::State& state) { bench_derivative(state, DerivativeScheme::First); }
void bench_eno2(benchmark::State& state) { bench_derivative(state, DerivativeScheme::Eno2); }
void bench_eno3(benchmark::State& state) { bench_derivative(state, DerivativeScheme::Eno3); }
void bench_weno5(benchmark::State& state) { bench_derivative(state, DerivativeScheme::Weno5); }

void bench_rocket_term(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemSetup setup = build_rocket_problem(n);
    const ScalarField& v = setup.initial_value;
    for (auto _ : state) {
        TermResult r = term_lax_friedrichs(0.0, v, setup.problem);
        benchmark::DoNotOptimize(r.dvdt.values().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(v.size()));
}

void bench_rocket_rk3_step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemSetup setup = build_rocket_problem(n);
    const HamiltonianProblem& problem = setup.problem;
    const TermFn term = [&problem](double t, const ScalarField& f) {
        return term_lax_friedrichs(t, f, problem);
    };
    IntegratorOptions opts;
    opts.max_step = 1e-3; // one short step per iteration
    for (auto _ : state) {
        IntegrationResult r = ode_cfl_3(term, {0.0, opts.max_step}, setup.initial_value, opts);
        benchmark::DoNotOptimize(r.v.values().data());
    }
}

void bench_rotation_rk3_step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemSetup setup = rigid_rotation_problem(n);
    const HamiltonianProblem& problem = setup.problem;
    const TermFn term = [&problem](double t, const ScalarField& f) {
        return term_lax_friedrichs(t, f, problem);
    };
    IntegratorOptions opts;
    opts.max_step = 1e-3;
    for (auto _ : state) {
        IntegrationResult r = ode_cfl_3(term, {0.0, opts.max_step}, setup.initial_value, opts);
        benchmark::DoNotOptimize(r.v.values().data());
    }
}

BENCHMARK(bench_pad_ghost)->Arg(32)->Arg(64);
BENCHMARK(bench_first)->Arg(32)->Arg(64);
BENCHMARK(bench_eno2)->Arg(32)->Arg(64);
BENCHMARK(bench_eno3)->Arg(32)->Arg(64);
BENCHMARK(bench_weno5)->Arg(32)->Arg(64);
BENCHMARK(bench_rocket_term)->Arg(32)->Arg(50);
BENCHMARK(bench_rocket_rk3_step)->Arg(32)->Arg(50);
BENCHMARK(bench_rotation_rk3_step)->Arg(101);

} // namespace

BENCHMARK_MAIN();
