#include "levelset/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace levelset {

TermResult term_lax_friedrichs(double t, const ScalarField& v, const HamiltonianProblem& problem) {
    if (!problem.grid)
        throw std::invalid_argument("term_lax_friedrichs: problem has no grid");
    if (v.grid_ptr() != problem.grid)
        throw std::invalid_argument("term_lax_friedrichs: field grid does not match problem grid");
    if (!problem.ham_func || !problem.dissipation_bounds)
        throw std::invalid_argument("term_lax_friedrichs: problem must provide ham_func and dissipation_bounds");

    const Grid& g = *problem.grid;
    const int dim = g.dim();
    const std::size_t total = g.node_count();

    std::vector<DerivativePair> derivs;
    derivs.reserve(static_cast<std::size_t>(dim));
    std::vector<ScalarField> costate;
    costate.reserve(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d) {
        derivs.push_back(upwind_derivative(v, d, problem.costate_scheme));
        ScalarField central(problem.grid);
        const auto& pair = derivs.back();
        for (std::size_t i = 0; i < total; ++i)
            central[i] = 0.5 * (pair.left[i] + pair.right[i]);
        costate.push_back(std::move(central));
    }

    ScalarField ham(problem.grid);
    problem.ham_func(t, g, costate, ham);
    for (std::size_t i = 0; i < total; ++i)
        if (!std::isfinite(ham[i]))
            throw std::runtime_error("term_lax_friedrichs: hamiltonian produced a non-finite value");

    // Global Lax-Friedrichs: one dissipation coefficient per dimension,
    // the grid-wide maximum of the user bound.
    std::vector<double> alpha(static_cast<std::size_t>(dim), 0.0);
    ScalarField bound(problem.grid);
    for (int d = 0; d < dim; ++d) {
        problem.dissipation_bounds(t, g, d, bound);
        double m = 0.0;
        for (std::size_t i = 0; i < total; ++i) {
            const double b = bound[i];
            if (!std::isfinite(b) || b < 0.0)
                throw std::runtime_error("term_lax_friedrichs: dissipation bound must be finite and non-negative");
            m = std::max(m, b);
        }
        alpha[static_cast<std::size_t>(d)] = m;
    }

    TermResult result{ScalarField(problem.grid), 0.0};
    for (std::size_t i = 0; i < total; ++i) {
        double dissipation = 0.0;
        for (int d = 0; d < dim; ++d)
            dissipation += alpha[static_cast<std::size_t>(d)] *
                           (derivs[static_cast<std::size_t>(d)].right[i] -
                            derivs[static_cast<std::size_t>(d)].left[i]);
        result.dvdt[i] = -(ham[i] - 0.5 * dissipation);
    }

    double speed = 0.0;
    for (int d = 0; d < dim; ++d)
        speed += alpha[static_cast<std::size_t>(d)] / g.spacing(d);
    result.step_bound = speed > 0.0 ? 1.0 / speed : std::numeric_limits<double>::infinity();

    if (problem.restrict_update)
        result.dvdt = restrict_update(result.dvdt, problem.update_direction);
    return result;
}

ScalarField restrict_update(const ScalarField& dvdt, UpdateDirection direction) {
    ScalarField out(dvdt.grid_ptr());
    if (direction == UpdateDirection::Grow) {
        for (std::size_t i = 0; i < dvdt.size(); ++i)
            out[i] = std::min(dvdt[i], 0.0);
    } else {
        for (std::size_t i = 0; i < dvdt.size(); ++i)
            out[i] = std::max(dvdt[i], 0.0);
    }
    return out;
}

} // namespace levelset
