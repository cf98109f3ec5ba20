#pragma once

#include <vector>

#include "plankton/model.hpp"

namespace plankton {

struct OrbitSpec {
    PlanktonState initial;
    int steps = 10000;
    int transient = 9000;
    int record_every = 1;

    void validate() const {
        if (steps <= 0 || transient < 0 || transient >= steps || record_every <= 0)
            throw std::invalid_argument("OrbitSpec: need 0 <= transient < steps, record_every > 0");
    }
};

struct OrbitResult {
    std::vector<PlanktonState> states; // post-transient, every record_every steps
    bool diverged = false;
    int steps_done = 0;
};

struct SweepResult {
    std::vector<double> theta_grid;
    std::vector<std::vector<PlanktonState>> samples; // per-theta kept states
    std::vector<double> mle;                         // per-theta exponent (NaN on divergence)
    std::vector<bool> diverged;
};

// Repeated application of the map; iteration halts early with the
// divergence flag once |u| or |v| exceeds 1e6.
OrbitResult iterate_orbit(const ModelParams& p, const OrbitSpec& spec);

// For each theta on the uniform grid runs the orbit and keeps the last
// `keep` states plus the maximum Lyapunov exponent. Columns are computed
// in parallel; output order is grid order.
SweepResult bifurcation_sweep(const ModelParams& base, double theta_min, double theta_max,
                              int grid_n, const OrbitSpec& spec, int keep);

// Average log growth of a tangent vector propagated through the Jacobian
// along the orbit, renormalized every step; post-transient steps only.
// Throws NumericalError if the orbit diverges.
double max_lyapunov_exponent(const ModelParams& p, const OrbitSpec& spec,
                             PlanktonState tangent0 = {1.0, 1.0});

} // namespace plankton
