#include "plankton/dynamics.hpp"

#include <cmath>
#include <limits>
#include <thread>

#include "plankton/roots.hpp"

namespace plankton {

namespace {

constexpr double kDivergenceBound = 1e6;

bool out_of_bounds(PlanktonState s) {
    return !(std::abs(s.u) <= kDivergenceBound) || !(std::abs(s.v) <= kDivergenceBound);
}

} // namespace

OrbitResult iterate_orbit(const ModelParams& p, const OrbitSpec& spec) {
    spec.validate();
    OrbitResult res;
    PlanktonState s = spec.initial;
    for (int n = 0; n < spec.steps; ++n) {
        s = evaluate_map(p, s);
        res.steps_done = n + 1;
        if (out_of_bounds(s)) {
            res.diverged = true;
            break;
        }
        if (n >= spec.transient && (n - spec.transient) % spec.record_every == 0)
            res.states.push_back(s);
    }
    return res;
}

double max_lyapunov_exponent(const ModelParams& p, const OrbitSpec& spec,
                             PlanktonState tangent0) {
    spec.validate();
    PlanktonState s = spec.initial;
    double tu = tangent0.u, tv = tangent0.v;
    const double n0 = std::hypot(tu, tv);
    if (!(n0 > 0.0))
        throw std::invalid_argument("max_lyapunov_exponent: zero tangent");
    tu /= n0;
    tv /= n0;
    double acc = 0.0;
    int count = 0;
    for (int n = 0; n < spec.steps; ++n) {
        const Mat2 J = jacobian(p, s);
        s = evaluate_map(p, s);
        if (out_of_bounds(s))
            throw NumericalError("max_lyapunov_exponent: orbit diverged");
        const double wu = J.a11 * tu + J.a12 * tv;
        const double wv = J.a21 * tu + J.a22 * tv;
        const double norm = std::hypot(wu, wv);
        if (!(norm > 0.0))
            throw NumericalError("max_lyapunov_exponent: tangent collapsed");
        tu = wu / norm;
        tv = wv / norm;
        if (n >= spec.transient) {
            acc += std::log(norm);
            ++count;
        }
    }
    return acc / count;
}

SweepResult bifurcation_sweep(const ModelParams& base, double theta_min, double theta_max,
                              int grid_n, const OrbitSpec& spec, int keep) {
    if (!(theta_min > 0.0) || !(theta_min < theta_max) || grid_n < 2 || keep <= 0)
        throw std::invalid_argument("bifurcation_sweep: need 0 < theta_min < theta_max, grid_n >= 2, keep > 0");
    spec.validate();

    SweepResult res;
    res.theta_grid.resize(grid_n);
    res.samples.resize(grid_n);
    res.mle.resize(grid_n);
    res.diverged.assign(grid_n, false);
    for (int i = 0; i < grid_n; ++i)
        res.theta_grid[i] = theta_min + (theta_max - theta_min) * i / (grid_n - 1.0);

    const auto run_column = [&](int i) {
        const ModelParams p = base.with_theta(res.theta_grid[i]);
        OrbitSpec col = spec;
        col.transient = std::max(0, spec.steps - keep);
        col.record_every = 1;
        const OrbitResult orbit = iterate_orbit(p, col);
        res.samples[i] = orbit.states;
        res.diverged[i] = orbit.diverged;
        if (orbit.diverged) {
            res.mle[i] = std::numeric_limits<double>::quiet_NaN();
        } else {
            try {
                res.mle[i] = max_lyapunov_exponent(p, spec);
            } catch (const NumericalError&) {
                res.mle[i] = std::numeric_limits<double>::quiet_NaN();
            }
        }
    };

    // Columns are independent; slots are preassigned so assembly stays in
    // grid order regardless of scheduling.
    const unsigned hw = std::thread::hardware_concurrency();
    const int n_threads = static_cast<int>(std::min<unsigned>(hw ? hw : 1, grid_n));
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) {
        workers.emplace_back([&, t] {
            for (int i = t; i < grid_n; i += n_threads) run_column(i);
        });
    }
    for (auto& w : workers) w.join();
    return res;
}

} // namespace plankton
