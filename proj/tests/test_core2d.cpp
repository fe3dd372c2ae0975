#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "swl2d/core2d.hpp"
#include "swl2d/normal_form.hpp"

using namespace swl2d;
using testgen::Rng;
using testgen::uni;

TEST_CASE("eig2 rotation-plus-scalar") {
    const Spectrum2 sp = eig2({-1, -1, 1, -1});
    CHECK(!sp.is_real);
    CHECK(sp.hurwitz);
    CHECK(sp.lambda1.real() == doctest::Approx(-1.0));
    CHECK(sp.lambda1.imag() == doctest::Approx(1.0));
    CHECK(sp.lambda2.imag() == doctest::Approx(-1.0));
}

TEST_CASE("eig2 diagonal ordering") {
    const Spectrum2 sp = eig2({-2, 0, 0, -3});
    CHECK(sp.is_real);
    CHECK(sp.hurwitz);
    CHECK(sp.lambda1.real() == doctest::Approx(-2.0));
    CHECK(sp.lambda2.real() == doctest::Approx(-3.0));
    CHECK(std::abs(sp.lambda2) > std::abs(sp.lambda1));
}

TEST_CASE("eig2 characteristic polynomial residual on random matrices") {
    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        const Mat2 m{uni(rng, -3, 3), uni(rng, -3, 3), uni(rng, -3, 3), uni(rng, -3, 3)};
        const Spectrum2 sp = spectrum(m);
        for (const Complex l : {sp.lambda1, sp.lambda2}) {
            const Complex res = l * l - m.trace() * l + m.det();
            const double scale = std::max(1.0, std::norm(l));
            CHECK(std::abs(res) <= 1e-10 * scale);
        }
        // eigenvector residual
        if (sp.is_diagonalizable) {
            for (const auto& [l, v] : {std::pair{sp.lambda1, sp.v1}, {sp.lambda2, sp.v2}}) {
                const Complex r1 = m.a11 * v[0] + m.a12 * v[1] - l * v[0];
                const Complex r2 = m.a21 * v[0] + m.a22 * v[1] - l * v[1];
                CHECK(std::abs(r1) + std::abs(r2) <= 1e-8 * std::max(1.0, m.max_abs()));
            }
        }
    }
}

TEST_CASE("eig2 degenerate ordering is reported, not guessed") {
    CHECK_THROWS_AS(eig2({1, 0, 0, -1}), SwlError);
    try {
        eig2({1, 0, 0, -1});
    } catch (const SwlError& e) {
        CHECK(e.code() == ErrorCode::DegenerateOrdering);
    }
}

TEST_CASE("hypotheses: scalar matrix commutes with everything") {
    const HypothesisReport rep = hypotheses(Mat2::scalar(-1.0), {-1, -1, 1, -1});
    CHECK(rep.h1);
    CHECK(!rep.h2);
    CHECK(rep.failure_detail == HypothesisFailure::Commuting);
}

TEST_CASE("hypotheses: normal-form CC pair passes all") {
    const Mat2 a = cc_template_a(1.0, 2.0);
    const Mat2 b = cc_template_b(1.0);
    const HypothesisReport rep = hypotheses(a, b);
    CHECK(rep.h1);
    CHECK(rep.h2);
    CHECK(rep.h3);
    CHECK(rep.h4);
    CHECK(rep.failure_detail == HypothesisFailure::None);
}

TEST_CASE("hypotheses: shared eigenvector detected") {
    // both upper triangular, shared eigenvector (1,0)
    const Mat2 a{-1, 2, 0, -3};
    const Mat2 b{-2, 1, 0, -1};
    const HypothesisReport rep = hypotheses(a, b);
    CHECK(rep.h1);
    CHECK(rep.h2);
    CHECK(rep.h3);
    CHECK(!rep.h4);
    CHECK(rep.failure_detail == HypothesisFailure::SharedEigenvector);
}

TEST_CASE("hypotheses: defective matrix flagged non-diagonalizable") {
    const Mat2 a{-1, 1, 0, -1};  // Jordan block
    const Mat2 b{-1, -1, 1, -1};
    const HypothesisReport rep = hypotheses(a, b);
    CHECK(!rep.h3);
    CHECK(rep.failure_detail == HypothesisFailure::NonDiagonalizable);
}

TEST_CASE("invariants: rho from eigenvalues -1 +- i") {
    const Mat2 a{-1, -1, 1, -1};
    const Mat2 b = cc_template_a(0.5, 3.0) * 2.0;  // non-commuting partner
    const Invariants inv = invariants(a, b);
    CHECK(inv.rho_a.kind == Rho::Kind::Complex);
    CHECK(inv.rho_a.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("invariants: normal-form CC pair with E = 2 has K = 1.25") {
    const Mat2 a = cc_template_a(1.0, 2.0);
    const Mat2 b = cc_template_b(1.0);
    const Invariants inv = invariants(a, b);
    CHECK(inv.case_tag == CaseTag::CC);
    CHECK(inv.kappa.kind == Kappa::Kind::Real);
    CHECK(inv.kappa.value == doctest::Approx(1.25).epsilon(1e-12));
    // D = 1.25^2 + 2*1.25 - 3 = 1.0625
    CHECK(inv.dd == doctest::Approx(1.0625).epsilon(1e-12));
}

TEST_CASE("invariants: hypotheses violation is rejected with the report") {
    CHECK_THROWS_AS(invariants(Mat2::scalar(-1.0), cc_template_b(1.0)), HypothesesViolated);
    try {
        invariants(Mat2::scalar(-1.0), cc_template_b(1.0));
    } catch (const HypothesesViolated& e) {
        CHECK(e.report().failure_detail == HypothesisFailure::Commuting);
    }
}

TEST_CASE("invariants are similarity- and scaling-invariant") {
    Rng rng(2024);
    for (int i = 0; i < 120; ++i) {
        const testgen::SamplePair base = testgen::sample_h14(rng);
        const testgen::SamplePair conj = testgen::conjugate(base, rng);
        const Invariants i0 = invariants(base.a, base.b);
        const Invariants i1 = invariants(conj.a, conj.b);
        CHECK(i0.case_tag == i1.case_tag);
        CHECK(i1.rho_a.value == doctest::Approx(i0.rho_a.value).epsilon(1e-9));
        CHECK(i1.rho_b.value == doctest::Approx(i0.rho_b.value).epsilon(1e-9));
        CHECK(i1.kappa.value == doctest::Approx(i0.kappa.value).epsilon(1e-9));
        CHECK(i1.dd == doctest::Approx(i0.dd).epsilon(2e-9));
    }
}

TEST_CASE("trichotomy of the K parameter over random H1-H4 pairs") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        const testgen::SamplePair s = testgen::sample_h14(rng);
        const Invariants inv = invariants(s.a, s.b);
        switch (inv.case_tag) {
            case CaseTag::CC:
                CHECK(inv.kappa.kind == Kappa::Kind::Real);
                CHECK(std::abs(inv.kappa.value) > 1.0);
                CHECK(inv.rho_a.kind == Rho::Kind::Complex);
                CHECK(inv.rho_a.value > 0.0);
                CHECK(inv.rho_b.value > 0.0);
                break;
            case CaseTag::RR:
                CHECK(inv.kappa.kind == Kappa::Kind::Real);
                CHECK(std::abs(std::abs(inv.kappa.value) - 1.0) > 1e-12);
                CHECK(inv.rho_a.value > 1.0);
                CHECK(inv.rho_b.value > 1.0);
                break;
            case CaseTag::RC:
                CHECK(inv.kappa.kind == Kappa::Kind::Imaginary);
                CHECK(inv.chi.has_value());
                break;
        }
        CHECK(std::isfinite(inv.dd));
    }
}
