#include "plankton/fixed_points.hpp"

#include <algorithm>
#include <cmath>

#include "plankton/roots.hpp"
#include "plankton/stability.hpp"

namespace plankton {

namespace {

constexpr double kTangentTol = 1e-9;

// Psi_2 extended to u=1 (the checked psi() rejects the endpoint).
double psi2_at(const ModelParams& p, double u) {
    const double u2 = u * u;
    return (p.beta * u - p.r) * (1.0 + p.c * u2) / u2;
}

double scan_left(const ModelParams& p) { return p.r / p.beta + 1e-9; }

FixedPointRecord make_interior(const ModelParams& p, double u, bool tangent) {
    FixedPointRecord rec;
    rec.point = {u, 1.0 - u};
    rec.kind = FixedPointKind::interior;
    rec.tangent = tangent;
    const auto [cp, cq] = characteristic_data(p, u);
    rec.char_p = cp;
    rec.char_q = cq;
    return rec;
}

} // namespace

const char* to_string(StabilityLabel label) {
    switch (label) {
        case StabilityLabel::attractive: return "attractive";
        case StabilityLabel::repelling: return "repelling";
        case StabilityLabel::saddle: return "saddle";
        case StabilityLabel::nonhyperbolic: return "nonhyperbolic";
    }
    return "?";
}

const char* to_string(FixedPointKind kind) {
    switch (kind) {
        case FixedPointKind::origin: return "origin";
        case FixedPointKind::boundary_u1: return "boundary_u1";
        case FixedPointKind::interior: return "interior";
    }
    return "?";
}

std::array<FixedPointRecord, 2> boundary_fixed_points() {
    FixedPointRecord origin;
    origin.point = {0.0, 0.0};
    origin.kind = FixedPointKind::origin;
    FixedPointRecord u1;
    u1.point = {1.0, 0.0};
    u1.kind = FixedPointKind::boundary_u1;
    return {origin, u1};
}

std::optional<FixedPointRecord> interior_fixed_point_h1(const ModelParams& p) {
    if (p.h != 1)
        throw std::invalid_argument("interior_fixed_point_h1: requires h=1");
    if (!(p.beta > p.r) || !(p.theta < (p.beta - p.r) * (1.0 + p.c)))
        return std::nullopt;
    const double a = p.beta - p.r * p.c - p.theta;
    const double u = (p.r * p.c + p.theta - p.beta + std::sqrt(a * a + 4.0 * p.r * p.c * p.beta)) /
                     (2.0 * p.c * p.beta);
    auto rec = make_interior(p, u, false);
    rec.branch = "E";
    return rec;
}

CubicRoots psi2_critical_points(const ModelParams& p) {
    if (p.h != 2)
        throw std::invalid_argument("psi2_critical_points: requires h=2");
    if (!(p.beta > p.r))
        throw std::invalid_argument("psi2_critical_points: requires beta > r");
    const auto f = [&](double u) { return p.beta * p.c * u * u * u - p.beta * u + 2.0 * p.r; };

    CubicRoots roots;
    const double u_min = 1.0 / std::sqrt(3.0 * p.c); // interior minimum of f
    const double f1 = f(1.0);
    if (u_min >= 1.0) {
        // f decreasing on (0,1): at most one root
        if (f1 < 0.0) roots.u_hat_1 = bisect(f, 0.0, 1.0);
        return roots;
    }
    const double fm = f(u_min);
    if (fm > 0.0) return roots;
    if (fm == 0.0) {
        roots.u_hat_1 = u_min;
        return roots;
    }
    roots.u_hat_1 = bisect(f, 0.0, u_min);
    if (f1 > 0.0) roots.u_hat_2 = bisect(f, u_min, 1.0);
    return roots;
}

FixedPointCount count_positive_fixed_points(const ModelParams& p) {
    if (p.h != 2)
        throw std::invalid_argument("count_positive_fixed_points: requires h=2");
    if (!(p.beta > p.r)) return {0, "no-positive-fixed-point"};

    const CubicRoots cr = psi2_critical_points(p);
    const double p1 = (p.beta - p.r) * (1.0 + p.c); // Psi_2(1)
    const double theta = p.theta;

    // Crossing count from the monotone-segment structure of Psi_2.
    int count = 0;
    if (!cr.u_hat_1) {
        count = (theta > 0.0 && theta < p1) ? 1 : 0;
    } else if (!cr.u_hat_2) {
        const double m1 = psi2_at(p, *cr.u_hat_1); // local maximum
        if (std::abs(theta - m1) < kTangentTol) {
            count = 1;
        } else if (theta < m1) {
            count = 1 + (theta > p1 ? 1 : 0);
        }
    } else {
        const double m1 = psi2_at(p, *cr.u_hat_1); // local maximum
        const double m2 = psi2_at(p, *cr.u_hat_2); // local minimum
        const bool tan1 = std::abs(theta - m1) < kTangentTol;
        const bool tan2 = std::abs(theta - m2) < kTangentTol;
        if (tan1) ++count;
        else if (theta < m1) ++count;
        if (!tan1 && !tan2 && theta > m2 && theta < m1) ++count;
        if (tan2) ++count;
        else if (theta > m2 && theta < p1) ++count;
    }

    // Subcase label per the literal existence-case partition.
    const double c_star = (p.beta - 2.0 * p.r) / p.beta;
    std::string label = "no-matching-subcase";
    const double m1 = cr.u_hat_1 ? psi2_at(p, *cr.u_hat_1) : 0.0;
    const double m2 = cr.u_hat_2 ? psi2_at(p, *cr.u_hat_2) : 0.0;
    if (p.c <= 1.0 / 3.0) {
        if (p.c >= c_star && theta > 0.0 && theta < p1) label = "i.1";
        else if (p.c < c_star && cr.u_hat_1 && std::abs(theta - m1) < kTangentTol) label = "i.2";
        else if (p.c < c_star && cr.u_hat_1 && theta > p1 && theta < m1) label = "i.3";
    } else {
        const double c_fold = p.beta * p.beta / (27.0 * p.r * p.r);
        if (p.c >= c_fold && theta > 0.0 && theta < p1) label = "ii.1";
        else if (p.c <= c_star && cr.u_hat_1 &&
                 std::abs(theta - m1) < kTangentTol) label = "ii.2";
        else if (p.c < c_star && cr.u_hat_1 && theta > p1 && theta < m1) label = "ii.3";
        else if (p.c > c_star && p.c < c_fold && cr.u_hat_1 && cr.u_hat_2 &&
                 (std::abs(theta - m1) < kTangentTol || std::abs(theta - m2) < kTangentTol))
            label = "ii.4";
        else if (p.c > c_star && p.c < c_fold && cr.u_hat_1 && cr.u_hat_2 &&
                 theta > m2 && theta < m1) label = "ii.5";
    }
    return {count, label};
}

std::vector<FixedPointRecord> find_positive_fixed_points(const ModelParams& p) {
    std::vector<FixedPointRecord> out;
    if (!(p.beta > p.r)) return out;

    if (p.h == 1) {
        if (auto rec = interior_fixed_point_h1(p)) out.push_back(*rec);
        return out;
    }

    const CubicRoots cr = psi2_critical_points(p);
    const double p1 = (p.beta - p.r) * (1.0 + p.c);
    const double theta = p.theta;
    const double left = scan_left(p);
    const auto g = [&](double u) { return psi2_at(p, u) - theta; };

    if (!cr.u_hat_1) {
        if (theta > 0.0 && theta < p1)
            out.push_back(make_interior(p, bisect(g, left, 1.0), false));
    } else if (!cr.u_hat_2) {
        const double u1 = *cr.u_hat_1;
        const double m1 = psi2_at(p, u1);
        if (std::abs(theta - m1) < kTangentTol) {
            out.push_back(make_interior(p, u1, true));
        } else if (theta < m1) {
            out.push_back(make_interior(p, bisect(g, left, u1), false));
            if (theta > p1)
                out.push_back(make_interior(p, bisect(g, u1, 1.0), false));
        }
    } else {
        const double u1 = *cr.u_hat_1;
        const double u2 = *cr.u_hat_2;
        const double m1 = psi2_at(p, u1);
        const double m2 = psi2_at(p, u2);
        const bool tan1 = std::abs(theta - m1) < kTangentTol;
        const bool tan2 = std::abs(theta - m2) < kTangentTol;
        if (tan1) out.push_back(make_interior(p, u1, true));
        else if (theta < m1) out.push_back(make_interior(p, bisect(g, left, u1), false));
        if (!tan1 && !tan2 && theta > m2 && theta < m1)
            out.push_back(make_interior(p, bisect(g, u1, u2), false));
        if (tan2) out.push_back(make_interior(p, u2, true));
        else if (theta > m2 && theta < p1)
            out.push_back(make_interior(p, bisect(g, u2, 1.0), false));
    }

    std::sort(out.begin(), out.end(),
              [](const FixedPointRecord& a, const FixedPointRecord& b) { return a.point.u < b.point.u; });

    // Branch labels follow the bracketing by the critical points.
    for (auto& rec : out) {
        const double u = rec.point.u;
        if (cr.u_hat_1 && u > *cr.u_hat_1) {
            if (cr.u_hat_2 && u > *cr.u_hat_2) rec.branch = "E+";
            else rec.branch = "E0";
        } else {
            rec.branch = "E-";
        }
    }
    return out;
}

} // namespace plankton
