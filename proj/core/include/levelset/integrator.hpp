#pragma once

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "levelset/grid.hpp"
#include "levelset/hamiltonian.hpp"

namespace levelset {

/// Controls for the CFL-constrained integrators.
struct IntegratorOptions {
    /// Fraction of the term's CFL step bound an accepted step may use.
    double cfl_factor = 0.32;
    /// Hard cap on the step size regardless of the CFL bound.
    double max_step = std::numeric_limits<double>::infinity();
    /// Loop runs while tf - t >= termination_epsilon * tf.
    double termination_epsilon = 1e-6;
    /// If nonempty, steps are additionally clamped to land exactly on each
    /// checkpoint time inside the span (times must be ascending).
    std::vector<double> checkpoint_times;
};

/// One accepted step: time at the start of the step, the step taken, the
/// CFL bound reported by the first term evaluation, and the value range
/// after the step.
struct StepLogEntry {
    double t = 0.0;
    double dt = 0.0;
    double step_bound = 0.0;
    double v_min = 0.0;
    double v_max = 0.0;
};

/// Final integration state.
struct IntegrationResult {
    double t = 0.0;
    ScalarField v;
    std::vector<StepLogEntry> steps;
};

/// Semi-discrete right-hand side: returns dv/dt and the CFL step bound.
using TermFn = std::function<TermResult(double t, const ScalarField& v)>;

/// Forward Euler with CFL-limited adaptive steps.  Each step uses
/// dt = min(tf - t, max_step, cfl_factor * step_bound, next checkpoint - t).
IntegrationResult ode_cfl_1(const TermFn& term, std::pair<double, double> tspan,
                            ScalarField v0, const IntegratorOptions& opts = {});

/// Second-order TVD Runge-Kutta (Heun):
///   v1 = v + dt L(t, v);  v <- v + ((v1 + dt L(t + dt, v1)) - v) / 2.
/// The step size is clamped with the bound from the first term evaluation.
IntegrationResult ode_cfl_2(const TermFn& term, std::pair<double, double> tspan,
                            ScalarField v0, const IntegratorOptions& opts = {});

/// Third-order TVD Runge-Kutta:
///   v1 = v + dt L(t, v);  v2 = v1 + dt L(t + dt, v1)
///   v_half = v + (v2 - v) / 4
///   v_3half = v_half + dt L(t + dt / 2, v_half)
///   v <- v + 2 (v_3half - v) / 3
/// The step size is clamped with the bound from the first term evaluation.
IntegrationResult ode_cfl_3(const TermFn& term, std::pair<double, double> tspan,
                            ScalarField v0, const IntegratorOptions& opts = {});

/// Integrator selector used by configuration and the solve drivers.
enum class TimeIntegrator { Cfl1, Cfl2, Cfl3 };

IntegrationResult integrate(TimeIntegrator method, const TermFn& term,
                            std::pair<double, double> tspan, ScalarField v0,
                            const IntegratorOptions& opts = {});

} // namespace levelset
