#include <cmath>
#include <random>

#include <doctest.h>

#include "plankton/dynamics.hpp"
#include "plankton/model.hpp"
#include "plankton/regions.hpp"

using namespace plankton;

TEST_CASE("membership predicate of M") {
    RegionM m;
    CHECK(m.contains({0.0, 0.0}));
    CHECK(m.contains({1.0, 1.0}));
    CHECK(m.contains({0.5, 1.5}));
    CHECK_FALSE(m.contains({0.5, 1.5 + 1e-12}));
    CHECK_FALSE(m.contains({-1e-12, 0.5}));
    CHECK_FALSE(m.contains({1.1, 0.0}));
    CHECK_FALSE(m.contains({0.5, -0.1}));
}

TEST_CASE("h=1 nonnegativity conditions fire in order") {
    // theta <= 1 + beta - r
    const auto a = vupdate_nonneg_h1(ModelParams(2, 0.5, 1.2, 2, 1));
    CHECK(a.holds);
    CHECK(*a.which == NonnegCondition::a);
    // 1+beta-r = 2.5 < theta = 3 <= (1+beta-r)^2/beta = 3.125, c large enough
    const auto b = vupdate_nonneg_h1(ModelParams(2, 0.5, 3.0, 2, 1));
    CHECK(b.holds);
    CHECK(*b.which == NonnegCondition::b);
    // theta = 5 > 3.125, (sqrt(beta)-sqrt(theta))^2/(1-r) ~ 1.352 <= c
    const auto c = vupdate_nonneg_h1(ModelParams(2, 0.5, 5.0, 2, 1));
    CHECK(c.holds);
    CHECK(*c.which == NonnegCondition::c);
    // same theta but c too small
    const auto none = vupdate_nonneg_h1(ModelParams(2, 0.5, 5.0, 1.0, 1));
    CHECK_FALSE(none.holds);
    CHECK_FALSE(none.which.has_value());
    CHECK_THROWS_AS(vupdate_nonneg_h1(ModelParams(2, 0.5, 1.0, 1, 2)), std::invalid_argument);
}

TEST_CASE("Bernstein coefficients for h=2") {
    const auto [w, ok] = bernstein_coeffs_h2(ModelParams(0.4, 0.5, 1.0, 0.4, 2));
    CHECK(w.omega_0 == doctest::Approx(0.5));
    CHECK(w.omega_1 == doctest::Approx(0.5 + 0.4 / 3));
    CHECK(w.omega_2 == doctest::Approx(0.5));
    CHECK(w.omega_3 == doctest::Approx(1.4 * 0.9 - 1.0));
    CHECK(ok);
    CHECK_FALSE(bernstein_coeffs_h2(ModelParams(0.4, 0.5, 10.0, 0.4, 2)).second);
    CHECK_THROWS_AS(bernstein_coeffs_h2(ModelParams(2, 0.5, 1.0, 1, 1)), std::invalid_argument);
}

TEST_CASE("Bernstein nonnegativity implies v' >= 0 on the grid") {
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> ub(0.1, 2.0), ur(0.05, 1.0), ut(0.05, 4.0),
        uc(0.1, 2.0);
    int accepted = 0;
    while (accepted < 50) {
        const ModelParams p(ub(rng), ur(rng), ut(rng), uc(rng), 2);
        if (!bernstein_coeffs_h2(p).second) continue;
        ++accepted;
        for (int i = 0; i <= 200; ++i) {
            const double u = i / 200.0;
            const double v = (2.0 - u) * 0.5; // any positive v scales out
            const auto img = evaluate_map(p, {u, v});
            CHECK(img.v >= -1e-12);
        }
    }
}

TEST_CASE("invariance needs both the nonnegativity and the growth bound") {
    // condition (a) holds but theta < (beta-r)(1+c): not invariant
    CHECK_FALSE(m_invariance_conditions(ModelParams(2, 0.5, 1.2, 2, 1)));
    // theta above the threshold with condition (c): invariant
    CHECK(m_invariance_conditions(ModelParams(2, 0.5, 5.0, 2, 1)));
    // beta <= r: invariant for any theta passing nonnegativity
    CHECK(m_invariance_conditions(ModelParams(0.4, 0.5, 0.8, 0.4, 1)));
    CHECK(m_invariance_conditions(ModelParams(0.4, 0.5, 1.0, 0.4, 2)));
}

TEST_CASE("under the invariance conditions orbits stay in M") {
    std::mt19937 rng(909);
    std::uniform_real_distribution<double> ub(0.1, 2.5), ur(0.05, 1.0), ut(0.05, 6.0),
        uc(0.1, 2.5), uu(0.0, 1.0), us(0.0, 1.0);
    std::uniform_int_distribution<int> uh(1, 2);
    RegionM m;
    int accepted = 0;
    while (accepted < 60) {
        const ModelParams p(ub(rng), ur(rng), ut(rng), uc(rng), uh(rng));
        if (!m_invariance_conditions(p)) continue;
        ++accepted;
        for (int k = 0; k < 5; ++k) {
            PlanktonState s{uu(rng), 0.0};
            s.v = us(rng) * (2.0 - s.u);
            for (int step = 0; step < 300; ++step) {
                s = evaluate_map(p, s);
                CHECK(s.u >= -1e-12);
                CHECK(s.u <= 1.0 + 1e-12);
                CHECK(s.v >= -1e-12);
                CHECK(s.v <= 2.0 - s.u + 1e-9);
            }
            (void)m;
        }
    }
}

TEST_CASE("attractor prediction and the limits it promises") {
    const ModelParams p(2, 0.5, 5.0, 2, 1);
    CHECK(global_attractor_prediction(p, {0.5, 0.5}) == AttractorPrediction::boundary_u1);
    CHECK(global_attractor_prediction(p, {0.0, 1.0}) == AttractorPrediction::origin);
    CHECK(global_attractor_prediction(p, {0.5, 3.0}) == AttractorPrediction::not_applicable);
    CHECK(global_attractor_prediction(ModelParams(2, 0.5, 1.2, 2, 1), {0.5, 0.5}) ==
          AttractorPrediction::not_applicable);

    OrbitSpec spec;
    spec.initial = {0.5, 0.5};
    spec.steps = 5000;
    spec.transient = 4999;
    const auto res = iterate_orbit(p, spec);
    REQUIRE(!res.diverged);
    REQUIRE(res.states.size() == 1);
    CHECK(std::abs(res.states[0].u - 1.0) < 1e-6);
    CHECK(std::abs(res.states[0].v) < 1e-6);

    spec.initial = {0.0, 1.0};
    const auto res0 = iterate_orbit(p, spec);
    REQUIRE(!res0.diverged);
    CHECK(std::abs(res0.states[0].u) < 1e-6);
    CHECK(std::abs(res0.states[0].v) < 1e-6);

    CHECK(std::string(to_string(AttractorPrediction::origin)) == "origin");
    CHECK(std::string(to_string(AttractorPrediction::boundary_u1)) == "boundary_u1");
    CHECK(std::string(to_string(AttractorPrediction::not_applicable)) == "not_applicable");
}
