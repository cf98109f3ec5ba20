#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "plankton/model.hpp"

namespace plankton {

// Candidate Neimark-Sacker point: theta0 solves q(u)=1 jointly with
// theta = Psi_h(u).
struct NSPoint {
    double theta0;
    double u_tilde;
    double v_tilde; // = 1 - u_tilde
};

// Taylor coefficients of the origin-shifted map at theta = theta0. The
// x-equation is exactly quadratic; absent entries vanish identically.
struct TaylorCoeffs {
    double a10, a01, a20, a11;      // x-equation
    double b10, b01, b20, b11, b21, b30; // y-equation
};

// Coefficients of the map in the real eigenbasis: X' = R X + F(X,Y),
// Y' = ... + G(X,Y), with s = sqrt(4u - u^2).
struct NormalFormCoeffs {
    double s;
    double c20, c11, c02, c30, c21, c12, c03;
    double d20, d11, d02, d30, d21, d12, d03;
};

enum class CurveStability { attracting, repelling };

struct NSReport {
    NSPoint ns_point;
    std::complex<double> lambda1, lambda2; // lambda1 has negative imaginary part
    double d_modulus_dtheta;
    std::complex<double> L20, L11, L02, L21;
    double L_quantity;
    CurveStability curve_stability;
};

// All solutions of { theta = Psi_h(u), q(u) = 1 } with theta0 > 0 and the
// fixed-point existence condition, ascending in u.
std::vector<NSPoint> solve_ns_points(double beta, double r, double c, int h);

// The index-th solution (ascending u; index 0 is the smallest-u branch).
std::optional<NSPoint> solve_ns_point(double beta, double r, double c, int h, int index = 0);

// Trace/determinant of the perturbed Jacobian at theta = theta0 + theta_star.
double perturbed_trace(const NSPoint& ns, const ModelParams& base, double theta_star);
double perturbed_det(const NSPoint& ns, const ModelParams& base, double theta_star);

// Complex-conjugate eigenvalue pair at the perturbed parameter; first
// eigenvalue carries the negative imaginary part. Throws NumericalError
// in the real-eigenvalue regime.
std::pair<std::complex<double>, std::complex<double>>
perturbed_eigenvalues(const NSPoint& ns, const ModelParams& base, double theta_star);

// d|lambda|/dtheta* at theta* = 0; always negative.
double transversality(const NSPoint& ns, const ModelParams& base);

TaylorCoeffs taylor_coefficients(const NSPoint& ns, const ModelParams& base);

NormalFormCoeffs normal_form(const NSPoint& ns, const TaylorCoeffs& tc);

// Discriminating quantity of the normal form and the assembled report.
NSReport lyapunov_quantity(const NSPoint& ns, const ModelParams& base, const NormalFormCoeffs& nf);

// Full pipeline for the index-th NS point.
std::optional<NSReport> ns_report(double beta, double r, double c, int h, int index = 0);

} // namespace plankton
