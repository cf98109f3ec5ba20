#include "plankton/stability.hpp"

#include <cmath>

namespace plankton {

namespace {
constexpr double kTol = 1e-9;
}

const char* to_string(RootCase c) {
    switch (c) {
        case RootCase::both_inside: return "both_inside";
        case RootCase::one_root_minus1: return "one_root_minus1";
        case RootCase::inside_outside: return "inside_outside";
        case RootCase::both_outside: return "both_outside";
        case RootCase::conjugate_unit: return "conjugate_unit";
        case RootCase::double_minus1: return "double_minus1";
        case RootCase::root_at_1_other_inside: return "root_at_1_other_inside";
        case RootCase::root_at_1_other_on: return "root_at_1_other_on";
        case RootCase::root_at_1_other_outside: return "root_at_1_other_outside";
        case RootCase::root_gt1_other_lt_minus1: return "root_gt1_other_lt_minus1";
        case RootCase::root_gt1_other_eq_minus1: return "root_gt1_other_eq_minus1";
        case RootCase::root_gt1_other_inside: return "root_gt1_other_inside";
    }
    return "?";
}

RootLocation quadratic_root_location(double B, double C) {
    RootLocation loc{};
    const double disc = B * B - 4.0 * C;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        loc.roots[0] = (-B - s) / 2.0;
        loc.roots[1] = (-B + s) / 2.0;
    } else {
        const double s = std::sqrt(-disc);
        loc.roots[0] = {-B / 2.0, -s / 2.0};
        loc.roots[1] = {-B / 2.0, s / 2.0};
    }

    const double f1 = 1.0 + B + C;
    const double fm1 = 1.0 - B + C;
    if (std::abs(f1) < kTol) {
        const double mod = std::abs(C); // |other root|, since root product = C
        if (std::abs(mod - 1.0) < kTol) loc.kind = RootCase::root_at_1_other_on;
        else if (mod < 1.0) loc.kind = RootCase::root_at_1_other_inside;
        else loc.kind = RootCase::root_at_1_other_outside;
    } else if (f1 > 0.0) {
        if (std::abs(fm1) < kTol) {
            loc.kind = std::abs(B - 2.0) < kTol ? RootCase::double_minus1
                                                : RootCase::one_root_minus1;
        } else if (fm1 < 0.0) {
            loc.kind = RootCase::inside_outside;
        } else if (std::abs(C - 1.0) < kTol) {
            loc.kind = RootCase::conjugate_unit;
        } else if (C < 1.0) {
            loc.kind = RootCase::both_inside;
        } else {
            loc.kind = RootCase::both_outside;
        }
    } else {
        if (std::abs(fm1) < kTol) loc.kind = RootCase::root_gt1_other_eq_minus1;
        else if (fm1 < 0.0) loc.kind = RootCase::root_gt1_other_lt_minus1;
        else loc.kind = RootCase::root_gt1_other_inside;
    }
    return loc;
}

std::pair<double, double> characteristic_data(const ModelParams& p, double u_star) {
    if (!(u_star > 0.0) || !(u_star < 1.0))
        throw std::invalid_argument("characteristic_data: u_star must lie in (0,1)");
    if (std::abs(psi(p.beta, p.r, p.c, p.h, u_star) - p.theta) >= 1e-6)
        throw std::invalid_argument("characteristic_data: u_star is not a fixed point for theta");
    const double uh = p.h == 1 ? u_star : u_star * u_star;
    const double uhm1 = p.h == 1 ? 1.0 : u_star;
    const double denom = 1.0 + p.c * uh;
    const double cp = 2.0 - u_star;
    const double cq = 1.0 - u_star +
                      u_star * (1.0 - u_star) * (p.beta - p.theta * p.h * uhm1 / (denom * denom));
    return {cp, cq};
}

std::pair<StabilityLabel, StabilityLabel> classify_boundary(const ModelParams& p) {
    StabilityLabel origin;
    if (std::abs(p.r - 2.0) < kTol) origin = StabilityLabel::nonhyperbolic;
    else if (p.r < 2.0) origin = StabilityLabel::saddle;
    else origin = StabilityLabel::repelling;

    const double lo = (p.beta - p.r) * (1.0 + p.c);
    const double hi = (2.0 + p.beta - p.r) * (1.0 + p.c);
    StabilityLabel u1;
    if (std::abs(p.theta - lo) < kTol || std::abs(p.theta - hi) < kTol)
        u1 = StabilityLabel::nonhyperbolic;
    else if (p.theta > lo && p.theta < hi)
        u1 = StabilityLabel::attractive;
    else
        u1 = StabilityLabel::saddle;
    return {origin, u1};
}

StabilityLabel classify_interior(const ModelParams& p, const FixedPointRecord& record) {
    if (record.kind != FixedPointKind::interior)
        throw std::invalid_argument("classify_interior: record is not interior");
    const auto [cp, cq] = characteristic_data(p, record.point.u);
    const double f1 = 1.0 - cp + cq;
    const double fm1 = 1.0 + cp + cq;
    if (std::abs(f1) < kTol || std::abs(fm1) < kTol)
        return StabilityLabel::nonhyperbolic;
    if (std::abs(cq - 1.0) < kTol && std::abs(cp) < 2.0)
        return StabilityLabel::nonhyperbolic;
    if (f1 < 0.0 && fm1 > 0.0)
        return StabilityLabel::saddle;
    if (f1 > 0.0 && fm1 > 0.0)
        return cq < 1.0 ? StabilityLabel::attractive : StabilityLabel::repelling;
    // F(1)<0 and F(-1)<0: real roots beyond +1 and below -1
    return StabilityLabel::repelling;
}

} // namespace plankton
