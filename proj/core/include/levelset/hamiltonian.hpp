#pragma once

#include <functional>
#include <span>

#include "levelset/grid.hpp"
#include "levelset/spatial_derivatives.hpp"

namespace levelset {

/// Direction in which the represented set is allowed to evolve when the
/// monotone update clamp is active.  Grow permits only expansion of the zero
/// sublevel set (values may only decrease); Shrink permits only contraction.
enum class UpdateDirection { Grow, Shrink };

/// Evaluates H(t, x, p) at every node.  `costate` holds one central
/// derivative field per dimension; the result is written into `out`.
using HamiltonianFn = std::function<void(double t, const Grid& grid,
                                         std::span<const ScalarField> costate,
                                         ScalarField& out)>;

/// Writes a per-node upper bound on |dH/dp_dim| over admissible controls
/// into `out`; used for the dissipation coefficient and the CFL bound.
using DissipationFn = std::function<void(double t, const Grid& grid, int dim,
                                         ScalarField& out)>;

/// A Hamilton-Jacobi problem v_t + H(t, x, grad v) = 0 on a grid, with the
/// numerical choices needed to evaluate the right-hand side.
struct HamiltonianProblem {
    GridPtr grid;
    HamiltonianFn ham_func;
    DissipationFn dissipation_bounds;
    DerivativeScheme costate_scheme = DerivativeScheme::Eno2;
    UpdateDirection update_direction = UpdateDirection::Grow;
    bool restrict_update = false;
};

/// Right-hand side of the semi-discrete system plus the CFL step bound.
struct TermResult {
    ScalarField dvdt;
    double step_bound = 0.0;
};

/// Lax-Friedrichs approximation of dv/dt = -H(t, x, grad v).
///
/// Per dimension, one-sided derivatives are computed with the problem's
/// costate scheme; H is evaluated at the central costate (left + right) / 2;
/// the dissipation sum_d alpha_d * (right_d - left_d) / 2 is subtracted from
/// H, where alpha_d is the grid-wide maximum of the problem's dissipation
/// bound (global Lax-Friedrichs).  step_bound = 1 / sum_d alpha_d / dx_d.
///
/// If problem.restrict_update is set, the result is clamped so the update
/// can only move values in the problem's update direction.
///
/// Throws std::runtime_error if the Hamiltonian or a dissipation bound
/// evaluates to a non-finite value.
TermResult term_lax_friedrichs(double t, const ScalarField& v, const HamiltonianProblem& problem);

/// Monotone update clamp: with Grow returns min(dvdt, 0) per node (values
/// may only decrease, the zero sublevel set may only expand); with Shrink
/// returns max(dvdt, 0).
ScalarField restrict_update(const ScalarField& dvdt, UpdateDirection direction);

} // namespace levelset
