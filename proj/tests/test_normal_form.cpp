#include <doctest.h>

#include "support/generators.hpp"
#include "swl2d/classifier.hpp"
#include "swl2d/normal_form.hpp"

using namespace swl2d;
using testgen::Rng;
using testgen::uni;

namespace {

double rel_err(const Mat2& x, const Mat2& y) {
    const double scale = std::max({x.max_abs(), y.max_abs(), 1e-30});
    return (x - y).max_abs() / scale;
}

/// check the defining relation and the template structure
void check_form(const Mat2& a_in, const Mat2& b_in, const NormalForm& nf) {
    const Mat2 first = nf.swapped ? b_in : a_in;
    const Mat2 second = nf.swapped ? a_in : b_in;
    const Mat2 ti = nf.t.inverse();
    CHECK(rel_err((ti * first * nf.t) / nf.alpha_a, nf.a_nf) < 1e-9);
    CHECK(rel_err((ti * second * nf.t) / nf.alpha_b, nf.b_nf) < 1e-9);
    CHECK(nf.alpha_a > 0.0);
    CHECK(nf.alpha_b > 0.0);

    Mat2 ta, tb;
    switch (nf.case_tag) {
        case CaseTag::CC:
            ta = cc_template_a(nf.rho_a, nf.e);
            tb = cc_template_b(nf.rho_b);
            CHECK(std::abs(nf.e) > 1.0);
            CHECK(0.5 * (nf.e + 1.0 / nf.e) == doctest::Approx(nf.kappa).epsilon(1e-9));
            break;
        case CaseTag::RC:
            ta = rc_template_a(nf.rho_a);
            tb = rc_template_b(nf.rho_b, nf.kappa);
            CHECK(nf.rho_a > 1.0);
            CHECK(nf.rho_b > 0.0);
            break;
        case CaseTag::RR:
            ta = rr_template_a(nf.rho_a);
            tb = rr_template_b(nf.rho_b, nf.kappa);
            CHECK(nf.rho_a > 1.0);
            CHECK(nf.rho_b > 1.0);
            break;
    }
    CHECK(rel_err(nf.a_nf, ta) < 1e-9);
    CHECK(rel_err(nf.b_nf, tb) < 1e-9);
}

}  // namespace

TEST_CASE("normal form: CC input already in normal form is a fixed point") {
    const Mat2 a = cc_template_a(0.8, 2.0);
    const Mat2 b = cc_template_b(1.1);
    const NormalForm nf = to_normal_form(a, b);
    CHECK(nf.case_tag == CaseTag::CC);
    CHECK(rel_err(nf.t, Mat2::identity()) < 1e-9);
    CHECK(nf.alpha_a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(nf.alpha_b == doctest::Approx(1.0).epsilon(1e-12));
    check_form(a, b, nf);
}

TEST_CASE("normal form: round trip recovers CC parameters") {
    Rng rng(41);
    for (int i = 0; i < 300; ++i) {
        const testgen::SamplePair s0 = testgen::sample_cc22(rng, 0.0, 10.0);
        const testgen::SamplePair s = testgen::conjugate(s0, rng);
        const NormalForm nf = to_normal_form(s.a, s.b);
        CHECK(nf.case_tag == CaseTag::CC);
        CHECK(nf.rho_a == doctest::Approx(s0.rho_a).epsilon(1e-8));
        CHECK(nf.rho_b == doctest::Approx(s0.rho_b).epsilon(1e-8));
        CHECK(nf.e == doctest::Approx(s0.kappa + std::sqrt(s0.kappa * s0.kappa - 1.0)).epsilon(1e-8));
        check_form(s.a, s.b, nf);
    }
}

TEST_CASE("normal form: round trip recovers RC parameters, with the swap") {
    Rng rng(42);
    for (int i = 0; i < 300; ++i) {
        const testgen::SamplePair s0 = testgen::sample_rc22b(rng, 0.0, 10.0);
        testgen::SamplePair s = testgen::conjugate(s0, rng);
        const bool swap_inputs = i % 2 == 1;
        if (swap_inputs) std::swap(s.a, s.b);
        const NormalForm nf = to_normal_form(s.a, s.b);
        CHECK(nf.case_tag == CaseTag::RC);
        CHECK(nf.swapped == swap_inputs);
        CHECK(nf.rho_a == doctest::Approx(s0.rho_a).epsilon(1e-8));
        CHECK(nf.rho_b == doctest::Approx(s0.rho_b).epsilon(1e-8));
        CHECK(std::abs(nf.kappa) == doctest::Approx(std::abs(s0.kappa)).epsilon(1e-8));
        check_form(s.a, s.b, nf);
        // diagonal entries of the real-eigenvalue template: -a +- 1
        CHECK(nf.a_nf.a11 == doctest::Approx(-nf.rho_a + 1.0).epsilon(1e-9));
        CHECK(nf.a_nf.a22 == doctest::Approx(-nf.rho_a - 1.0).epsilon(1e-9));
    }
}

TEST_CASE("normal form: round trip recovers RR parameters") {
    Rng rng(43);
    for (int i = 0; i < 300; ++i) {
        const testgen::SamplePair s0 = i % 2 == 0 ? testgen::sample_rr22b(rng, 0.0, 10.0)
                                                  : testgen::sample_rr22a(rng);
        const testgen::SamplePair s = testgen::conjugate(s0, rng);
        const NormalForm nf = to_normal_form(s.a, s.b);
        CHECK(nf.case_tag == CaseTag::RR);
        CHECK(nf.rho_a == doctest::Approx(s0.rho_a).epsilon(1e-8));
        CHECK(nf.rho_b == doctest::Approx(s0.rho_b).epsilon(1e-8));
        CHECK(nf.kappa == doctest::Approx(s0.kappa).epsilon(1e-8));
        check_form(s.a, s.b, nf);
    }
}

TEST_CASE("normal form: kappa recomputed from the forms matches the input pair") {
    Rng rng(44);
    for (int i = 0; i < 60; ++i) {
        const testgen::SamplePair s = testgen::conjugate(testgen::sample_h14(rng), rng);
        const Invariants before = invariants(s.a, s.b);
        const NormalForm nf = to_normal_form(s.a, s.b);
        const Invariants after = invariants(nf.a_nf, nf.b_nf);
        CHECK(after.kappa.value == doctest::Approx(before.kappa.value).epsilon(1e-8));
        CHECK(after.dd == doctest::Approx(before.dd).epsilon(1e-7));
    }
}

TEST_CASE("normal form: classification is preserved") {
    Rng rng(45);
    for (int i = 0; i < 60; ++i) {
        const testgen::SamplePair s = testgen::conjugate(testgen::sample_h14(rng), rng);
        const Verdict v0 = classify(s.a, s.b);
        const NormalForm nf = to_normal_form(s.a, s.b);
        const Verdict v1 = classify(nf.a_nf, nf.b_nf);
        CHECK(v0.outcome == v1.outcome);
        CHECK(v0.subcase == v1.subcase);
        CHECK(v0.contraction.has_value() == v1.contraction.has_value());
        if (v0.contraction) {
            CHECK(*v0.contraction == doctest::Approx(*v1.contraction).epsilon(1e-8));
        }
    }
}

TEST_CASE("normal form: hypotheses violations are rejected") {
    CHECK_THROWS_AS(to_normal_form(Mat2::scalar(-1.0), cc_template_b(1.0)), HypothesesViolated);
}
