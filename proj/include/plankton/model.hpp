#pragma once

#include <stdexcept>

namespace plankton {

// Parameter tuple of the discrete plankton map. All rates are strictly
// positive; the Holling exponent h is restricted to 1 (type II) or 2
// (type III).
struct ModelParams {
    double beta;   // conversion efficiency
    double r;      // zooplankton mortality
    double theta;  // toxin liberation rate
    double c;      // saturation constant
    int h;         // Holling exponent, 1 or 2

    ModelParams(double beta_, double r_, double theta_, double c_, int h_)
        : beta(beta_), r(r_), theta(theta_), c(c_), h(h_) {
        if (!(beta > 0.0) || !(r > 0.0) || !(theta > 0.0) || !(c > 0.0))
            throw std::invalid_argument("ModelParams: beta, r, theta, c must be positive");
        if (h != 1 && h != 2)
            throw std::invalid_argument("ModelParams: h must be 1 or 2");
    }

    // Same parameters with theta replaced.
    ModelParams with_theta(double theta_) const {
        return ModelParams(beta, r, theta_, c, h);
    }
};

// A point (u, v) in population space. Map images may leave the
// nonnegative quadrant; use checked() for user-supplied states.
struct PlanktonState {
    double u = 0.0;
    double v = 0.0;

    static PlanktonState checked(double u, double v) {
        if (u < 0.0 || v < 0.0)
            throw std::invalid_argument("PlanktonState: u and v must be nonnegative");
        return {u, v};
    }

    bool nonnegative() const { return u >= 0.0 && v >= 0.0; }
};

struct Mat2 {
    double a11, a12;
    double a21, a22;

    double trace() const { return a11 + a22; }
    double det() const { return a11 * a22 - a12 * a21; }
};

// One application of the map
//   u' = u(2-u) - uv
//   v' = beta*u*v + (1-r)v - theta*u^h*v / (1 + c*u^h).
// The formula is applied exactly; negative outputs are returned as-is.
PlanktonState evaluate_map(const ModelParams& p, PlanktonState s);

// Jacobian of the map at s.
Mat2 jacobian(const ModelParams& p, PlanktonState s);

// Psi_h(u) = (beta*u - r)(1 + c*u^h) / u^h, the theta value that makes
// (u, 1-u) a fixed point. Requires u in (0,1).
double psi(double beta, double r, double c, int h, double u);

} // namespace plankton
