#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "swl2d/value_function.hpp"

using namespace swl2d;
using testgen::Rng;
using testgen::uni;

TEST_CASE("segment integral matches quadrature") {
    Rng rng(51);
    for (int i = 0; i < 60; ++i) {
        Mat2 d{uni(rng, -2, 2), uni(rng, -2, 2), uni(rng, -2, 2), uni(rng, -2, 2)};
        const Vec2 x{uni(rng, -1, 1), uni(rng, -1, 1)};
        const double h = uni(rng, 0.01, 0.8);
        const double closed = squared_norm_integral(d, x, h);
        const double quad = testoracle::squared_norm_quadrature(d, x, h);
        CHECK(closed == doctest::Approx(quad).epsilon(1e-10));
    }
    // defective and scalar corners
    const Mat2 jordan{-1, 1, 0, -1};
    CHECK(squared_norm_integral(jordan, {1, 1}, 0.5) ==
          doctest::Approx(testoracle::squared_norm_quadrature(jordan, {1, 1}, 0.5)).epsilon(1e-10));
    const Mat2 sc = Mat2::scalar(-2.0);
    CHECK(squared_norm_integral(sc, {1, 0}, 1.0) ==
          doctest::Approx((1.0 - std::exp(-4.0)) / 4.0).epsilon(1e-12));
}

TEST_CASE("value function: pure contraction gives v = 1/2") {
    const Mat2 a = Mat2::scalar(-1.0);
    const AngularFunction v = solve_value(a, a, 256, 1e-2);
    for (int i = 0; i < v.size(); ++i) {
        CHECK(v.values()[i] == doctest::Approx(0.5).epsilon(1e-8));
    }
}

TEST_CASE("value function: single rotating field matches the quadratic cost") {
    // for a single matrix the cost is x^T P x with A^T P + P A = -I
    const Mat2 a{-1, -1, 1, -1};
    const Mat2 p = testoracle::lyapunov_solve(a, Mat2::identity());
    const AngularFunction v = solve_value(a, a, 512, 1e-3);
    for (int i = 0; i < v.size(); ++i) {
        const Vec2 u = unit(v.grid_angle(i));
        CHECK(v.values()[i] == doctest::Approx(u.dot(p * u)).epsilon(1e-4));
    }
}

TEST_CASE("value function: generic single matrix against the quadratic oracle") {
    const Mat2 a{-0.8, 1.1, -2.0, -1.4};
    REQUIRE(a.hurwitz());
    const Mat2 p = testoracle::lyapunov_solve(a, Mat2::identity());
    const AngularFunction v = solve_value(a, a, 1024, 1e-3);
    double max_err = 0.0;
    for (int i = 0; i < v.size(); ++i) {
        const Vec2 u = unit(v.grid_angle(i));
        max_err = std::max(max_err, std::abs(v.values()[i] - u.dot(p * u)));
    }
    CHECK(max_err < 1e-4);

    // gradient of W = sqrt(x^T P x) at level-1 points
    for (int k = 0; k < 32; ++k) {
        const double th = 2.0 * M_PI * k / 32;
        const Vec2 y = level_point(v, th);
        const Vec2 g = level_gradient(v, th);
        const double w = std::sqrt(y.dot(p * y));
        const Vec2 g_exact = (p * y) / w;
        CHECK((g - g_exact).norm() < 1e-4);
    }
}

TEST_CASE("value function: pi-symmetry and positivity") {
    Rng rng(52);
    const testgen::SamplePair s = testgen::sample_cc22(rng, 0.0, 0.5);
    const AngularFunction v = solve_value(s.a, s.b, 512, 2e-3);
    const int n = v.size();
    for (int i = 0; i < n / 2; ++i) {
        CHECK(v.values()[i] > 0.0);
        CHECK(v.values()[i] == doctest::Approx(v.values()[i + n / 2]).epsilon(1e-9));
    }
}

TEST_CASE("value function: Euler identity at level-1 points") {
    Rng rng(53);
    const testgen::SamplePair s = testgen::sample_cc22(rng, 0.0, 0.5);
    const AngularFunction v = solve_value(s.a, s.b, 512, 2e-3);
    for (int k = 0; k < 720; ++k) {
        const double th = 2.0 * M_PI * k / 720;
        const Vec2 y = level_point(v, th);
        const Vec2 g = level_gradient(v, th);
        CHECK(std::abs(g.dot(y) - 1.0) <= 1e-8);
    }
}

TEST_CASE("value function: decrease property of W along both fields") {
    Rng rng(54);
    for (int i = 0; i < 4; ++i) {
        const testgen::SamplePair s = testgen::sample_gues_any(rng, i, 0.3);
        const AngularFunction v = solve_value(s.a, s.b, 512, 2e-3);
        for (int k = 0; k < v.size(); k += 2) {
            const double th = v.grid_angle(k);
            const Vec2 y = level_point(v, th);
            const Vec2 g = level_gradient(v, th);
            CHECK(g.dot(s.a * y) < 0.0);
            CHECK(g.dot(s.b * y) < 0.0);
        }
    }
}

TEST_CASE("value function: strict convexity of the level set") {
    Rng rng(55);
    const testgen::SamplePair s = testgen::sample_cc22(rng, 0.0, 0.5);
    const AngularFunction v = solve_value(s.a, s.b, 512, 2e-3);
    CHECK(level_set_strictly_convex(v, 1e-8));
}

TEST_CASE("value function: refinement shrinks the discretization error") {
    Rng rng(56);
    const testgen::SamplePair s = testgen::sample_cc22(rng, 0.0, 0.5);
    const AngularFunction v1 = solve_value(s.a, s.b, 256, 8e-3);
    const AngularFunction v2 = solve_value(s.a, s.b, 512, 4e-3);
    const AngularFunction v3 = solve_value(s.a, s.b, 1024, 2e-3);
    double d12 = 0.0, d23 = 0.0;
    for (int k = 0; k < 256; ++k) {
        const double th = 2.0 * M_PI * k / 256;
        d12 = std::max(d12, std::abs(v1(th) - v2(th)));
        d23 = std::max(d23, std::abs(v2(th) - v3(th)));
    }
    CHECK(d23 < d12);  // first-order-in-h behaviour
}

TEST_CASE("value function: iterates from zero stay monotone (spot check)") {
    // both candidate one-step values are nonnegative, so the fixed point
    // dominates every iterate; check v >= the one-step cost
    Rng rng(57);
    const testgen::SamplePair s = testgen::sample_cc22(rng, 0.0, 0.5);
    const double h = 2e-3;
    const AngularFunction v = solve_value(s.a, s.b, 512, h);
    for (int k = 0; k < v.size(); k += 8) {
        const Vec2 u = unit(v.grid_angle(k));
        const double one_step =
            std::max(squared_norm_integral(s.a, u, h), squared_norm_integral(s.b, u, h));
        CHECK(v.values()[k] >= one_step - 1e-12);
    }
}

TEST_CASE("value function: rejects non-GUES pairs") {
    Rng rng(58);
    const testgen::SamplePair s = testgen::sample_cc21(rng);
    CHECK_THROWS_AS(solve_value(s.a, s.b, 256, 1e-2), SwlError);
    try {
        solve_value(s.a, s.b, 256, 1e-2);
    } catch (const SwlError& e) {
        CHECK(e.code() == ErrorCode::NotGues);
    }
}
