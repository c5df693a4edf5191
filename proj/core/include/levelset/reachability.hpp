#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "levelset/grid.hpp"
#include "levelset/hamiltonian.hpp"
#include "levelset/integrator.hpp"

namespace levelset {

/// Parameters of the two-vehicle pursuit game in relative coordinates
/// (x: cross-range separation, z: vertical separation, theta: relative
/// heading).  Both vehicles thrust with acceleration `a` under gravity `g`;
/// the scalar controls are turn rates in [u_min, u_max]; capture occurs when
/// the planar separation drops below capture_radius.
struct RocketParams {
    double a = 1.0;                // thrust acceleration, ft/s^2
    double g = 32.0;               // gravity, ft/s^2
    double capture_radius = 1.5;   // ft
    double u_min = -1.0;
    double u_max = 1.0;
};

/// Closed-form game Hamiltonian at one state/costate sample:
///   H = -a p1 cos(theta) - p2 (g - a - a sin(theta))
///       - u_max |p1 x + p3| + u_min |p2 x + p3|
double rocket_hamiltonian_value(double x, double theta, double p1, double p2, double p3,
                                const RocketParams& params);

/// Evaluates the closed-form Hamiltonian at every node; costate must hold
/// the three central derivative fields.  The grid must be 3-D with
/// dimensions (x, z, theta).
void rocket_hamiltonian(double t, const Grid& grid, std::span<const ScalarField> costate,
                        ScalarField& out, const RocketParams& params);

/// Per-node bound on |dH/dp_dim| over admissible controls:
///   dim 0: |a cos(theta)| + |x|
///   dim 1: |a sin(theta) + a - g| + |x|
///   dim 2: u_max - u_min
void rocket_dissipation(double t, const Grid& grid, int dim, ScalarField& out,
                        const RocketParams& params);

/// A grid-sampled problem together with its initial value function.
struct ProblemSetup {
    HamiltonianProblem problem;
    ScalarField initial_value;
};

/// Pursuit game over [-64, 64]^3 with `points_per_dim` nodes per dimension.
/// The target set is a cylinder of radius capture_radius around the theta
/// axis; the monotone clamp is enabled so the computed tube only grows.
/// With theta_periodic the heading dimension instead spans one period of
/// [-pi/2, pi/2) marked periodic.
ProblemSetup build_rocket_problem(int points_per_dim, const RocketParams& params = {},
                                  bool theta_periodic = false);

/// Solid-body rotation over [-1, 1]^2: H(x, p) = u(x) . p with velocity
/// u = (-x1, x0), dissipation bounds |u_d|.  The initial surface is a circle
/// of radius 0.5 centered at (0.5, 0).  One revolution takes time 2 pi.
ProblemSetup rigid_rotation_problem(int points_per_dim);

/// Checkpointed solve of a level-set problem.
struct SolveOutcome {
    /// Value fields at the checkpoint times, including the initial one.
    std::vector<ScalarField> checkpoints;
    /// Elapsed integration time of each checkpoint (0 for the initial one).
    std::vector<double> checkpoint_times;
    /// Accepted steps across all segments.
    std::vector<StepLogEntry> steps;
    /// Wall-clock seconds spent inside the integrator.
    double integration_seconds = 0.0;
};

/// Integrates the problem over |tspan.second - tspan.first| of elapsed time
/// with `n_checkpoints` equally spaced checkpoints (n_checkpoints >= 1
/// including the initial field).  Backward-reachability spans such as
/// (-T, 0) are parameterized so integration time increases from 0 to T.
SolveOutcome solve_brt(const ProblemSetup& setup, std::pair<double, double> tspan,
                       int n_checkpoints, TimeIntegrator method = TimeIntegrator::Cfl3,
                       const IntegratorOptions& opts = {});

} // namespace levelset
