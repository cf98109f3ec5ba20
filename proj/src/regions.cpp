#include "plankton/regions.hpp"

#include <cmath>

namespace plankton {

const char* to_string(AttractorPrediction p) {
    switch (p) {
        case AttractorPrediction::origin: return "origin";
        case AttractorPrediction::boundary_u1: return "boundary_u1";
        case AttractorPrediction::not_applicable: return "not_applicable";
    }
    return "?";
}

VUpdateNonneg vupdate_nonneg_h1(const ModelParams& p) {
    if (p.h != 1)
        throw std::invalid_argument("vupdate_nonneg_h1: requires h=1");
    const double m = 1.0 + p.beta - p.r;
    if (p.r <= 1.0 && p.theta <= m)
        return {true, NonnegCondition::a};
    if (p.r < 1.0 && p.theta > m && p.theta <= m * m / p.beta && p.c >= p.theta / m - 1.0)
        return {true, NonnegCondition::b};
    if (p.r < 1.0 && p.theta > m * m / p.beta) {
        const double d = std::sqrt(p.beta) - std::sqrt(p.theta);
        if (p.c >= d * d / (1.0 - p.r))
            return {true, NonnegCondition::c};
    }
    return {false, std::nullopt};
}

std::pair<BernsteinCoeffs, bool> bernstein_coeffs_h2(const ModelParams& p) {
    if (p.h != 2)
        throw std::invalid_argument("bernstein_coeffs_h2: requires h=2");
    BernsteinCoeffs w;
    w.omega_0 = 1.0 - p.r;
    w.omega_1 = p.beta / 3.0 + 1.0 - p.r;
    w.omega_2 = (2.0 * p.beta - p.r * p.c + p.c - p.theta) / 3.0 + 1.0 - p.r;
    w.omega_3 = (p.c + 1.0) * (1.0 - p.r + p.beta) - p.theta;
    return {w, w.all_nonnegative()};
}

bool m_invariance_conditions(const ModelParams& p) {
    const bool nonneg = p.h == 1 ? vupdate_nonneg_h1(p).holds : bernstein_coeffs_h2(p).second;
    if (!nonneg) return false;
    return p.beta <= p.r || p.theta >= (p.beta - p.r) * (1.0 + p.c);
}

AttractorPrediction global_attractor_prediction(const ModelParams& p, PlanktonState s0) {
    if (!m_invariance_conditions(p) || !RegionM{}.contains(s0))
        return AttractorPrediction::not_applicable;
    return s0.u == 0.0 ? AttractorPrediction::origin : AttractorPrediction::boundary_u1;
}

} // namespace plankton
