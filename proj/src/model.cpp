#include "plankton/model.hpp"

namespace plankton {

namespace {

// u^h and u^(h-1) for h in {1,2} without calling pow. For h=1 the
// derivative factor u^(h-1) is 1 even at u=0.
inline double upow(double u, int h) { return h == 1 ? u : u * u; }
inline double upow_m1(double u, int h) { return h == 1 ? 1.0 : u; }

} // namespace

PlanktonState evaluate_map(const ModelParams& p, PlanktonState s) {
    const double uh = upow(s.u, p.h);
    const double u1 = s.u * (2.0 - s.u) - s.u * s.v;
    const double v1 = p.beta * s.u * s.v + (1.0 - p.r) * s.v - p.theta * uh * s.v / (1.0 + p.c * uh);
    return {u1, v1};
}

Mat2 jacobian(const ModelParams& p, PlanktonState s) {
    const double uh = upow(s.u, p.h);
    const double denom = 1.0 + p.c * uh;
    Mat2 J;
    J.a11 = 2.0 - 2.0 * s.u - s.v;
    J.a12 = -s.u;
    J.a21 = p.beta * s.v - p.theta * p.h * upow_m1(s.u, p.h) * s.v / (denom * denom);
    J.a22 = p.beta * s.u + 1.0 - p.r - p.theta * uh / denom;
    return J;
}

double psi(double beta, double r, double c, int h, double u) {
    if (!(u > 0.0) || !(u < 1.0))
        throw std::invalid_argument("psi: u must lie in (0,1)");
    const double uh = upow(u, h);
    return (beta * u - r) * (1.0 + c * uh) / uh;
}

} // namespace plankton
