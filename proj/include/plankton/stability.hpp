#pragma once

#include <complex>
#include <utility>

#include "plankton/fixed_points.hpp"
#include "plankton/model.hpp"

namespace plankton {

// Root-location outcomes for F(lambda) = lambda^2 + B*lambda + C
// (quadratic Jury-type conditions via F(1), F(-1) and C).
enum class RootCase {
    both_inside,
    one_root_minus1,
    inside_outside,
    both_outside,
    conjugate_unit,
    double_minus1,
    root_at_1_other_inside,
    root_at_1_other_on,
    root_at_1_other_outside,
    root_gt1_other_lt_minus1,
    root_gt1_other_eq_minus1,
    root_gt1_other_inside,
};

const char* to_string(RootCase c);

struct RootLocation {
    RootCase kind;
    std::complex<double> roots[2];
};

// Classifies the roots of lambda^2 + B*lambda + C; equality tests use an
// absolute band of 1e-9.
RootLocation quadratic_root_location(double B, double C);

// Characteristic data (p, q) = (trace, det) of the Jacobian at an
// interior fixed point (u*, 1-u*):
//   p = 2 - u*,  q = 1 - u* + u*(1-u*)(beta - theta*h*u*^(h-1)/(1+c*u*^h)^2).
// Rejects u* that is not a fixed point of the map (|Psi_h(u*) - theta| >= 1e-6).
std::pair<double, double> characteristic_data(const ModelParams& p, double u_star);

// Labels for (0,0) and (1,0).
std::pair<StabilityLabel, StabilityLabel> classify_boundary(const ModelParams& p);

// Label for an interior fixed point, derived from (p, q) via the
// quadratic root-location conditions.
StabilityLabel classify_interior(const ModelParams& p, const FixedPointRecord& record);

} // namespace plankton
