#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace plankton {

// Raised when a numerical procedure cannot proceed (no bracket, orbit
// divergence, real-eigenvalue regime, ...). The CLI maps this to exit 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bisection on a sign-change bracket [a,b]. Unconditionally convergent;
// tolerance is on the u interval.
template <class F>
double bisect(F&& f, double a, double b, double tol = 1e-12, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0.0) == (fb < 0.0))
        throw NumericalError("bisect: no sign change in bracket");
    for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Scan [a,b] on a uniform grid and bisect every sign-change bracket.
// Roots are returned in ascending order.
template <class F>
std::vector<double> scan_roots(F&& f, double a, double b, int grid_n, double tol = 1e-12) {
    std::vector<double> roots;
    if (grid_n < 2) return roots;
    double x0 = a;
    double f0 = f(x0);
    for (int i = 1; i < grid_n; ++i) {
        const double x1 = a + (b - a) * static_cast<double>(i) / (grid_n - 1);
        const double f1 = f(x1);
        if (f0 == 0.0) {
            roots.push_back(x0);
        } else if (std::isfinite(f0) && std::isfinite(f1) && (f0 < 0.0) != (f1 < 0.0)) {
            roots.push_back(bisect(f, x0, x1, tol));
        }
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

} // namespace plankton
