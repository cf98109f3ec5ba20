#pragma once

#include <array>
#include <optional>

#include "plankton/model.hpp"

namespace plankton {

// The trapping region M = { 0 <= u <= 1, 0 <= v <= 2-u }.
struct RegionM {
    bool contains(PlanktonState s) const {
        return s.u >= 0.0 && s.u <= 1.0 && s.v >= 0.0 && s.v <= 2.0 - s.u;
    }
};

// Bernstein-basis coefficients of the v-update cubic for h=2; all
// nonnegative is sufficient for v' >= 0 on u in [0,1].
struct BernsteinCoeffs {
    double omega_0, omega_1, omega_2, omega_3;
    bool all_nonnegative() const {
        return omega_0 >= 0.0 && omega_1 >= 0.0 && omega_2 >= 0.0 && omega_3 >= 0.0;
    }
};

enum class NonnegCondition { a, b, c };

struct VUpdateNonneg {
    bool holds = false;
    std::optional<NonnegCondition> which;
};

enum class AttractorPrediction { origin, boundary_u1, not_applicable };

const char* to_string(AttractorPrediction p);

// Sufficient conditions (a)-(c) for v' >= 0 when h=1; the first matching
// condition is reported.
VUpdateNonneg vupdate_nonneg_h1(const ModelParams& p);

// Bernstein coefficients of psi(u) = beta*c*u^3 - (rc-c+theta)u^2 + beta*u + 1-r
// for h=2; holds iff all coefficients are nonnegative.
std::pair<BernsteinCoeffs, bool> bernstein_coeffs_h2(const ModelParams& p);

// True iff the applicable nonnegativity condition holds and additionally
// beta <= r or theta >= (beta-r)(1+c); then M maps into itself.
bool m_invariance_conditions(const ModelParams& p);

// Predicted limit of the orbit from s0 under the global-convergence
// conditions; not_applicable when they fail or s0 is outside M.
AttractorPrediction global_attractor_prediction(const ModelParams& p, PlanktonState s0);

} // namespace plankton
