#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "plankton/model.hpp"

namespace plankton {

enum class FixedPointKind { origin, boundary_u1, interior };

enum class StabilityLabel { attractive, repelling, saddle, nonhyperbolic };

const char* to_string(StabilityLabel label);
const char* to_string(FixedPointKind kind);

struct FixedPointRecord {
    PlanktonState point;
    FixedPointKind kind;
    double char_p = 0.0;  // trace of the Jacobian at the point
    double char_q = 0.0;  // determinant
    bool tangent = false; // root coincides with a critical point of Psi_2
    std::string branch;   // "E-", "E0", "E+" for interior points
    std::optional<StabilityLabel> label; // filled by the stability module
};

// Critical points of Psi_2 in (0,1), i.e. roots of f(u) = beta*c*u^3 - beta*u + 2r.
struct CubicRoots {
    std::optional<double> u_hat_1;
    std::optional<double> u_hat_2;
};

struct FixedPointCount {
    int count = 0;
    std::string case_label;
};

// The parameter-independent boundary fixed points (0,0) and (1,0).
std::array<FixedPointRecord, 2> boundary_fixed_points();

// Closed-form positive fixed point for h=1; empty unless beta > r and
// 0 < theta < (beta-r)(1+c).
std::optional<FixedPointRecord> interior_fixed_point_h1(const ModelParams& p);

// Roots of f(u) = beta*c*u^3 - beta*u + 2r in (0,1), located by sign
// checks at {0, 1/sqrt(3c), 1} and bisection. Requires h=2 and beta > r.
CubicRoots psi2_critical_points(const ModelParams& p);

// Number of positive fixed points for h=2 together with the matching
// existence subcase label; "no-matching-subcase" when the literal case
// partition leaves a gap. Requires h=2.
FixedPointCount count_positive_fixed_points(const ModelParams& p);

// All positive fixed points in ascending u. h=1 uses the closed form;
// h=2 bisects Psi_2(u) - theta on each monotone segment delimited by the
// critical points. Requires beta > r (returns empty otherwise).
std::vector<FixedPointRecord> find_positive_fixed_points(const ModelParams& p);

} // namespace plankton
