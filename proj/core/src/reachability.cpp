#include "levelset/reachability.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "levelset/implicit_surfaces.hpp"

namespace levelset {

double rocket_hamiltonian_value(double x, double theta, double p1, double p2, double p3,
                                const RocketParams& params) {
    return -params.a * p1 * std::cos(theta) -
           p2 * (params.g - params.a - params.a * std::sin(theta)) -
           params.u_max * std::abs(p1 * x + p3) + params.u_min * std::abs(p2 * x + p3);
}

void rocket_hamiltonian(double t, const Grid& grid, std::span<const ScalarField> costate,
                        ScalarField& out, const RocketParams& params) {
    (void)t;
    if (grid.dim() != 3)
        throw std::invalid_argument("rocket_hamiltonian: grid must be 3-D (x, z, theta)");
    if (costate.size() != 3)
        throw std::invalid_argument("rocket_hamiltonian: needs three costate fields");

    const auto xs = grid.coords(0);
    const auto thetas = grid.coords(2);
    const std::size_t total = grid.node_count();
    for (std::size_t i = 0; i < total; ++i)
        out[i] = rocket_hamiltonian_value(xs[i], thetas[i], costate[0][i], costate[1][i],
                                          costate[2][i], params);
}

void rocket_dissipation(double t, const Grid& grid, int dim, ScalarField& out,
                        const RocketParams& params) {
    (void)t;
    if (grid.dim() != 3)
        throw std::invalid_argument("rocket_dissipation: grid must be 3-D (x, z, theta)");
    const std::size_t total = grid.node_count();
    switch (dim) {
        case 0: {
            const auto xs = grid.coords(0);
            const auto thetas = grid.coords(2);
            for (std::size_t i = 0; i < total; ++i)
                out[i] = std::abs(params.a * std::cos(thetas[i])) + std::abs(xs[i]);
            return;
        }
        case 1: {
            const auto xs = grid.coords(0);
            const auto thetas = grid.coords(2);
            for (std::size_t i = 0; i < total; ++i)
                out[i] = std::abs(params.a * std::sin(thetas[i]) + params.a - params.g) +
                         std::abs(xs[i]);
            return;
        }
        case 2: {
            const double turn_span = params.u_max - params.u_min;
            for (std::size_t i = 0; i < total; ++i)
                out[i] = turn_span;
            return;
        }
        default:
            throw std::invalid_argument("rocket_dissipation: dimension out of range");
    }
}

ProblemSetup build_rocket_problem(int points_per_dim, const RocketParams& params,
                                  bool theta_periodic) {
    if (points_per_dim < 7)
        throw std::invalid_argument("build_rocket_problem: needs at least 7 points per dimension");
    if (!(params.u_max > params.u_min))
        throw std::invalid_argument("build_rocket_problem: u_max must exceed u_min");
    if (!(params.capture_radius > 0.0))
        throw std::invalid_argument("build_rocket_problem: capture_radius must be positive");

    GridPtr grid;
    if (theta_periodic) {
        const double half_pi = std::numbers::pi / 2.0;
        const double dtheta = std::numbers::pi / static_cast<double>(points_per_dim);
        grid = Grid::create({-64.0, -64.0, -half_pi}, {64.0, 64.0, half_pi - dtheta},
                            {points_per_dim, points_per_dim, points_per_dim}, {2});
    } else {
        grid = Grid::create({-64.0, -64.0, -64.0}, {64.0, 64.0, 64.0},
                            {points_per_dim, points_per_dim, points_per_dim});
    }

    HamiltonianProblem problem;
    problem.grid = grid;
    problem.ham_func = [params](double t, const Grid& g, std::span<const ScalarField> costate,
                                ScalarField& out) {
        rocket_hamiltonian(t, g, costate, out, params);
    };
    problem.dissipation_bounds = [params](double t, const Grid& g, int dim, ScalarField& out) {
        rocket_dissipation(t, g, dim, out, params);
    };
    problem.costate_scheme = DerivativeScheme::Eno2;
    problem.update_direction = UpdateDirection::Grow;
    problem.restrict_update = true;

    ScalarField initial = cylinder(grid, {2}, {0.0, 0.0, 0.0}, params.capture_radius);
    return ProblemSetup{std::move(problem), std::move(initial)};
}

ProblemSetup rigid_rotation_problem(int points_per_dim) {
    if (points_per_dim < 7)
        throw std::invalid_argument("rigid_rotation_problem: needs at least 7 points per dimension");

    GridPtr grid = Grid::create({-1.0, -1.0}, {1.0, 1.0}, {points_per_dim, points_per_dim});

    HamiltonianProblem problem;
    problem.grid = grid;
    problem.ham_func = [](double, const Grid& g, std::span<const ScalarField> costate,
                          ScalarField& out) {
        const auto xs = g.coords(0);
        const auto ys = g.coords(1);
        const std::size_t total = g.node_count();
        for (std::size_t i = 0; i < total; ++i)
            out[i] = -ys[i] * costate[0][i] + xs[i] * costate[1][i];
    };
    problem.dissipation_bounds = [](double, const Grid& g, int dim, ScalarField& out) {
        const auto u = dim == 0 ? g.coords(1) : g.coords(0);
        const std::size_t total = g.node_count();
        for (std::size_t i = 0; i < total; ++i)
            out[i] = std::abs(u[i]);
    };
    problem.costate_scheme = DerivativeScheme::Weno5;
    problem.update_direction = UpdateDirection::Grow;
    problem.restrict_update = false;

    ScalarField initial = sphere(grid, {0.5, 0.0}, 0.5);
    return ProblemSetup{std::move(problem), std::move(initial)};
}

SolveOutcome solve_brt(const ProblemSetup& setup, std::pair<double, double> tspan,
                       int n_checkpoints, TimeIntegrator method,
                       const IntegratorOptions& opts) {
    if (n_checkpoints < 1)
        throw std::invalid_argument("solve_brt: need at least one checkpoint");
    if (!std::isfinite(tspan.first) || !std::isfinite(tspan.second))
        throw std::invalid_argument("solve_brt: tspan must be finite");
    if (setup.initial_value.grid_ptr() != setup.problem.grid)
        throw std::invalid_argument("solve_brt: initial value grid does not match problem grid");

    const double duration = std::abs(tspan.second - tspan.first);

    SolveOutcome outcome;
    outcome.checkpoints.push_back(setup.initial_value);
    outcome.checkpoint_times.push_back(0.0);
    if (duration == 0.0 || n_checkpoints == 1)
        return outcome;

    const HamiltonianProblem& problem = setup.problem;
    TermFn term = [&problem](double t, const ScalarField& v) {
        return term_lax_friedrichs(t, v, problem);
    };

    const int segments = n_checkpoints - 1;
    const auto start = std::chrono::steady_clock::now();
    ScalarField v = setup.initial_value;
    double t = 0.0;
    for (int k = 1; k <= segments; ++k) {
        const double t_end = duration * static_cast<double>(k) / static_cast<double>(segments);
        IntegrationResult leg = integrate(method, term, {t, t_end}, std::move(v), opts);
        v = std::move(leg.v);
        t = leg.t;
        outcome.steps.insert(outcome.steps.end(), leg.steps.begin(), leg.steps.end());
        outcome.checkpoints.push_back(v);
        outcome.checkpoint_times.push_back(t_end);
    }
    const auto stop = std::chrono::steady_clock::now();
    outcome.integration_seconds = std::chrono::duration<double>(stop - start).count();
    return outcome;
}

} // namespace levelset
