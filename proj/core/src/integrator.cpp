#include "levelset/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levelset {

namespace {

void check_options(const IntegratorOptions& opts) {
    if (!(opts.cfl_factor > 0.0))
        throw std::invalid_argument("integrator: cfl_factor must be positive");
    if (!(opts.max_step > 0.0))
        throw std::invalid_argument("integrator: max_step must be positive");
    if (!(opts.termination_epsilon > 0.0))
        throw std::invalid_argument("integrator: termination_epsilon must be positive");
    if (!std::is_sorted(opts.checkpoint_times.begin(), opts.checkpoint_times.end()))
        throw std::invalid_argument("integrator: checkpoint_times must be ascending");
}

IntegrationResult run_cfl(const TermFn& term, std::pair<double, double> tspan,
                          ScalarField v0, const IntegratorOptions& opts, int order) {
    check_options(opts);
    const double t0 = tspan.first;
    const double tf = tspan.second;
    if (!std::isfinite(t0) || !std::isfinite(tf))
        throw std::invalid_argument("integrator: tspan must be finite");
    if (tf < t0)
        throw std::invalid_argument("integrator: tspan must not be decreasing");

    IntegrationResult result{t0, std::move(v0), {}};
    if (tf == t0)
        return result;

    double t = t0;
    const double eps_stop = opts.termination_epsilon * std::abs(tf);
    const std::size_t total = result.v.size();

    while (tf - t > 0.0 && tf - t >= eps_stop) {
        // The step is aimed at the nearest of tf and the next checkpoint so
        // that both are hit exactly rather than approached asymptotically.
        double target = tf;
        if (!opts.checkpoint_times.empty()) {
            auto next = std::upper_bound(opts.checkpoint_times.begin(),
                                         opts.checkpoint_times.end(), t);
            if (next != opts.checkpoint_times.end() && *next < tf)
                target = *next;
        }

        TermResult first = term(t, result.v);
        const double remaining = target - t;
        double dt = std::min(remaining, opts.max_step);
        dt = std::min(dt, opts.cfl_factor * first.step_bound);
        if (!(dt > 0.0))
            throw std::runtime_error("integrator: step size collapsed to zero");
        const bool lands = dt == remaining;

        ScalarField& v = result.v;
        if (order == 1) {
            for (std::size_t i = 0; i < total; ++i)
                v[i] += dt * first.dvdt[i];
        } else if (order == 2) {
            ScalarField v1(v.grid_ptr());
            for (std::size_t i = 0; i < total; ++i)
                v1[i] = v[i] + dt * first.dvdt[i];
            TermResult second = term(t + dt, v1);
            for (std::size_t i = 0; i < total; ++i)
                v[i] += 0.5 * ((v1[i] + dt * second.dvdt[i]) - v[i]);
        } else {
            ScalarField v1(v.grid_ptr());
            for (std::size_t i = 0; i < total; ++i)
                v1[i] = v[i] + dt * first.dvdt[i];
            TermResult second = term(t + dt, v1);
            for (std::size_t i = 0; i < total; ++i)
                v1[i] += dt * second.dvdt[i];            // v1 now holds v2
            ScalarField vhalf(v.grid_ptr());
            for (std::size_t i = 0; i < total; ++i)
                vhalf[i] = v[i] + 0.25 * (v1[i] - v[i]);
            TermResult third = term(t + 0.5 * dt, vhalf);
            for (std::size_t i = 0; i < total; ++i) {
                const double v32 = vhalf[i] + dt * third.dvdt[i];
                v[i] += (2.0 / 3.0) * (v32 - v[i]);
            }
        }

        double v_min = v[0], v_max = v[0];
        for (std::size_t i = 1; i < total; ++i) {
            v_min = std::min(v_min, v[i]);
            v_max = std::max(v_max, v[i]);
        }
        result.steps.push_back({t, dt, first.step_bound, v_min, v_max});
        t = lands ? target : t + dt;
    }
    result.t = t;
    return result;
}

} // namespace

IntegrationResult ode_cfl_1(const TermFn& term, std::pair<double, double> tspan,
                            ScalarField v0, const IntegratorOptions& opts) {
    return run_cfl(term, tspan, std::move(v0), opts, 1);
}

IntegrationResult ode_cfl_2(const TermFn& term, std::pair<double, double> tspan,
                            ScalarField v0, const IntegratorOptions& opts) {
    return run_cfl(term, tspan, std::move(v0), opts, 2);
}

IntegrationResult ode_cfl_3(const TermFn& term, std::pair<double, double> tspan,
                            ScalarField v0, const IntegratorOptions& opts) {
    return run_cfl(term, tspan, std::move(v0), opts, 3);
}

IntegrationResult integrate(TimeIntegrator method, const TermFn& term,
                            std::pair<double, double> tspan, ScalarField v0,
                            const IntegratorOptions& opts) {
    switch (method) {
        case TimeIntegrator::Cfl1: return ode_cfl_1(term, tspan, std::move(v0), opts);
        case TimeIntegrator::Cfl2: return ode_cfl_2(term, tspan, std::move(v0), opts);
        case TimeIntegrator::Cfl3: return ode_cfl_3(term, tspan, std::move(v0), opts);
    }
    throw std::invalid_argument("unknown integrator");
}

} // namespace levelset
