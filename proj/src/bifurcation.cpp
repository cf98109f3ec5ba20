#include "plankton/bifurcation.hpp"

#include <cmath>

#include "plankton/roots.hpp"

namespace plankton {

namespace {

inline double upow(double u, int h) { return h == 1 ? u : u * u; }
inline double upow_m1(double u, int h) { return h == 1 ? 1.0 : u; }

// theta making q(u)=1: (beta - 1/(1-u)) (1+c u^h)^2 / (h u^(h-1)).
double theta_from_unit_det(double beta, double c, int h, double u) {
    const double denom = 1.0 + c * upow(u, h);
    return (beta - 1.0 / (1.0 - u)) * denom * denom / (h * upow_m1(u, h));
}

} // namespace

std::vector<NSPoint> solve_ns_points(double beta, double r, double c, int h) {
    if (!(beta > r))
        throw std::invalid_argument("solve_ns_points: requires beta > r");
    const auto residual = [&](double u) {
        return theta_from_unit_det(beta, c, h, u) - psi(beta, r, c, h, u);
    };
    const double lo = r / beta + 1e-9;
    const double hi = 1.0 - 1e-9;
    std::vector<NSPoint> out;
    if (lo >= hi) return out;
    for (double u : scan_roots(residual, lo, hi, 10000)) {
        const double theta0 = psi(beta, r, c, h, u);
        if (!(theta0 > 0.0)) continue;
        if (!(theta0 < (beta - r) * (1.0 + c))) continue; // fixed point must exist
        out.push_back({theta0, u, 1.0 - u});
    }
    return out;
}

std::optional<NSPoint> solve_ns_point(double beta, double r, double c, int h, int index) {
    const auto pts = solve_ns_points(beta, r, c, h);
    if (index < 0 || index >= static_cast<int>(pts.size())) return std::nullopt;
    return pts[index];
}

double perturbed_trace(const NSPoint& ns, const ModelParams& base, double theta_star) {
    const double uh = upow(ns.u_tilde, base.h);
    return 2.0 - ns.u_tilde - theta_star * uh / (1.0 + base.c * uh);
}

double perturbed_det(const NSPoint& ns, const ModelParams& base, double theta_star) {
    const double uh = upow(ns.u_tilde, base.h);
    const double denom = 1.0 + base.c * uh;
    return 1.0 - theta_star * uh * (1.0 - ns.u_tilde) * (1.0 + base.h + base.c * uh) /
                     (denom * denom);
}

std::pair<std::complex<double>, std::complex<double>>
perturbed_eigenvalues(const NSPoint& ns, const ModelParams& base, double theta_star) {
    const double a = perturbed_trace(ns, base, theta_star);
    const double b = perturbed_det(ns, base, theta_star);
    const double disc = 4.0 * b - a * a;
    if (!(disc > 0.0))
        throw NumericalError("perturbed_eigenvalues: real-eigenvalue regime");
    const double im = 0.5 * std::sqrt(disc);
    return {{a / 2.0, -im}, {a / 2.0, im}};
}

double transversality(const NSPoint& ns, const ModelParams& base) {
    const double uh = upow(ns.u_tilde, base.h);
    const double denom = 1.0 + base.c * uh;
    return -uh * (1.0 - ns.u_tilde) * (1.0 + base.h + base.c * uh) / (2.0 * denom * denom);
}

TaylorCoeffs taylor_coefficients(const NSPoint& ns, const ModelParams& base) {
    const double u = ns.u_tilde;
    const double c = base.c;
    const int h = base.h;
    const double th = ns.theta0;
    const double uh = upow(u, h);
    const double D = 1.0 + c * uh;
    const double u_hm2 = h == 1 ? 1.0 / u : 1.0;
    const double u_hm3 = h == 1 ? 1.0 / (u * u) : 1.0 / u;

    TaylorCoeffs tc;
    tc.a10 = 1.0 - u;
    tc.a01 = -u;
    tc.a20 = -1.0;
    tc.a11 = -1.0;
    tc.b10 = (1.0 - u) * (base.beta - h * th * upow_m1(u, h) / (D * D));
    tc.b01 = 1.0;
    tc.b20 = h * th * (1.0 - u) * u_hm2 * (1.0 + c * uh + h * (c * uh - 1.0)) / (2.0 * D * D * D);
    tc.b11 = base.beta - h * th * upow_m1(u, h) / (D * D);
    tc.b21 = h * th * u_hm2 * (1.0 + c * uh + h * (c * uh - 1.0)) / (2.0 * D * D * D);
    tc.b30 = -h * th * (1.0 - u) * u_hm3 *
             (2.0 * D * D + 3.0 * h * (c * c * uh * uh - 1.0) +
              h * h * (1.0 - 4.0 * c * uh + c * c * uh * uh)) /
             (6.0 * D * D * D * D);
    return tc;
}

NormalFormCoeffs normal_form(const NSPoint& ns, const TaylorCoeffs& tc) {
    const double u = ns.u_tilde;
    if (!(u > 0.0) || !(u < 1.0))
        throw std::invalid_argument("normal_form: u_tilde must lie in (0,1)");
    const double s = std::sqrt(4.0 * u - u * u);
    const double b20 = tc.b20, b11 = tc.b11, b21 = tc.b21, b30 = tc.b30;

    NormalFormCoeffs nf;
    nf.s = s;
    nf.c20 = s * (b20 * u - 2.0) / 4.0;
    nf.c11 = (2.0 * u - 2.0 + u * (b11 - b20 * u)) / 2.0;
    nf.c02 = (2.0 * u * (2.0 - u) + u * u * (b20 * u - 2.0 * b21)) / (4.0 * s);
    nf.c30 = s * s * b30 * u / 8.0;
    nf.c21 = s * u * (2.0 * b21 - 3.0 * b30 * u) / 8.0;
    nf.c12 = u * u * (3.0 * b30 * u - 4.0 * b21) / 8.0;
    nf.c03 = u * u * u * (2.0 * b21 - b30 * u) / (8.0 * s);
    nf.d20 = b20 * s * s / 4.0;
    nf.d11 = s * (b11 - b20 * u) / 2.0;
    nf.d02 = u * (b20 * u - 2.0 * b11) / 4.0;
    nf.d30 = b30 * s * s * s / 8.0;
    nf.d21 = s * s * (2.0 * b21 - 3.0 * b30 * u) / 8.0;
    nf.d12 = s * u * (3.0 * b30 * u - 4.0 * b21) / 8.0;
    nf.d03 = u * u * (2.0 * b21 - b30 * u) / 8.0;
    return nf;
}

NSReport lyapunov_quantity(const NSPoint& ns, const ModelParams& base, const NormalFormCoeffs& nf) {
    using cd = std::complex<double>;

    const double FXX = 2.0 * nf.c20, FXY = nf.c11, FYY = 2.0 * nf.c02;
    const double FXXX = 6.0 * nf.c30, FXXY = 2.0 * nf.c21, FXYY = 2.0 * nf.c12,
                 FYYY = 6.0 * nf.c03;
    const double GXX = 2.0 * nf.d20, GXY = nf.d11, GYY = 2.0 * nf.d02;
    const double GXXX = 6.0 * nf.d30, GXXY = 2.0 * nf.d21, GXYY = 2.0 * nf.d12,
                 GYYY = 6.0 * nf.d03;

    const cd L20 = cd(FXX - FYY + 2.0 * GXY, GXX - GYY - 2.0 * FXY) / 8.0;
    const cd L11 = cd(FXX + FYY, GXX + GYY) / 4.0;
    const cd L02 = cd(FXX - FYY - 2.0 * GXY, GXX - GYY + 2.0 * FXY) / 8.0;
    const cd L21 = cd(FXXX + FXYY + GXXY + GYYY, GXXX + GXYY - FXXY - FYYY) / 16.0;

    const auto [lam_minus, lam_plus] = perturbed_eigenvalues(ns, base, 0.0);
    // The discriminating-quantity bracket takes the eigenvalue with
    // positive imaginary part, the orientation induced by the real
    // eigenbasis (X,Y); its conjugate multiplies L21.
    const cd l1 = lam_plus;
    const cd l2 = lam_minus;
    const double L = -std::real(((1.0 - 2.0 * l1) * l2 * l2 / (1.0 - l1)) * L11 * L20) -
                     0.5 * std::norm(L11) - std::norm(L02) + std::real(l2 * L21);

    NSReport rep;
    rep.ns_point = ns;
    rep.lambda1 = lam_minus;
    rep.lambda2 = lam_plus;
    rep.d_modulus_dtheta = transversality(ns, base);
    rep.L20 = L20;
    rep.L11 = L11;
    rep.L02 = L02;
    rep.L21 = L21;
    rep.L_quantity = L;
    rep.curve_stability = L < 0.0 ? CurveStability::attracting : CurveStability::repelling;
    return rep;
}

std::optional<NSReport> ns_report(double beta, double r, double c, int h, int index) {
    const auto ns = solve_ns_point(beta, r, c, h, index);
    if (!ns) return std::nullopt;
    const ModelParams base(beta, r, ns->theta0, c, h);
    const auto tc = taylor_coefficients(*ns, base);
    const auto nf = normal_form(*ns, tc);
    return lyapunov_quantity(*ns, base, nf);
}

} // namespace plankton
