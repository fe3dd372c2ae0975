#pragma once

// Random pair construction for tests: normal-form templates conjugated by
// random similarities and scaled by random positive constants, so the case
// and subcase of each sample are known by construction.

#include <optional>
#include <random>

#include "swl2d/classifier.hpp"
#include "swl2d/normal_form.hpp"

namespace swl2d::testgen {

using Rng = std::mt19937_64;

inline double uni(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Mat2 random_invertible(Rng& rng, double entry = 1.5, double min_det = 0.25) {
    while (true) {
        Mat2 t{uni(rng, -entry, entry), uni(rng, -entry, entry), uni(rng, -entry, entry),
               uni(rng, -entry, entry)};
        if (std::abs(t.det()) >= min_det) return t;
    }
}

struct SamplePair {
    Mat2 a, b;
    CaseTag tag;
    double rho_a, rho_b, kappa;  // real-convention normal-form parameters
    double formula_rho = 0.0;    // closed-form contraction when the subcase has one
};

inline SamplePair conjugate(SamplePair s, Rng& rng, bool scale = true) {
    const Mat2 t = random_invertible(rng);
    const Mat2 ti = t.inverse();
    const double al = scale ? uni(rng, 0.2, 4.0) : 1.0;
    const double be = scale ? uni(rng, 0.2, 4.0) : 1.0;
    s.a = ti * s.a * t * al;
    s.b = ti * s.b * t * be;
    return s;
}

/// CC.2.2 pair with contraction strictly inside (rho_min, rho_max).
inline SamplePair sample_cc22(Rng& rng, double rho_min = 0.0, double rho_max = 0.995) {
    while (true) {
        const double kk = uni(rng, 1.02, 3.0);
        const double e = kk + std::sqrt(kk * kk - 1.0);
        const double ra = uni(rng, 0.02, 2.0);
        const double rb = uni(rng, 0.02, 2.0);
        if (!(dd_of(CaseTag::CC, ra, rb, kk) > 1e-6)) continue;
        const double rho = rho_cc(ra, rb, kk);
        if (!(rho > rho_min && rho < rho_max)) continue;
        return {cc_template_a(ra, e), cc_template_b(rb), CaseTag::CC, ra, rb, kk, rho};
    }
}

/// CC.1 pair (D < 0).
inline SamplePair sample_cc1(Rng& rng) {
    while (true) {
        const double kk = uni(rng, 1.02, 1.6);
        const double e = kk + std::sqrt(kk * kk - 1.0);
        const double ra = uni(rng, 0.02, 0.8);
        const double rb = uni(rng, 0.02, 0.8);
        if (!(dd_of(CaseTag::CC, ra, rb, kk) < -1e-6)) continue;
        return {cc_template_a(ra, e), cc_template_b(rb), CaseTag::CC, ra, rb, kk, 0.0};
    }
}

/// CC.2.1 pair (D > 0, K < -1): unstable.
inline SamplePair sample_cc21(Rng& rng) {
    while (true) {
        const double kk = uni(rng, -3.0, -1.05);
        const double e = kk - std::sqrt(kk * kk - 1.0);  // |e| > 1 branch, negative
        const double ra = uni(rng, 0.05, 1.5);
        const double rb = uni(rng, 0.05, 1.5);
        if (!(dd_of(CaseTag::CC, ra, rb, kk) > 1e-6)) continue;
        return {cc_template_a(ra, e), cc_template_b(rb), CaseTag::CC, ra, rb, kk, 0.0};
    }
}

/// RC.2.2.B pair (D < 0, chi < 0, K/i > 0) with contraction filter.
inline SamplePair sample_rc22b(Rng& rng, double rho_min = 0.0, double rho_max = 0.995) {
    while (true) {
        const double a = uni(rng, 1.05, 3.0);
        const double rb = uni(rng, 0.05, 1.5);
        const double k = uni(rng, 0.05, 2.5);
        if (!(dd_of(CaseTag::RC, a, rb, k) < -1e-6)) continue;
        const RcData rc = rho_rc_data(a, rb, k);
        if (!(rc.rho > rho_min && rc.rho < rho_max)) continue;
        return {rc_template_a(a), rc_template_b(rb, k), CaseTag::RC, a, rb, k, rc.rho};
    }
}

/// RC.1 pair (D > 0).
inline SamplePair sample_rc1(Rng& rng) {
    while (true) {
        const double a = uni(rng, 1.5, 4.0);
        const double rb = uni(rng, 0.05, 0.6);
        const double k = uni(rng, -0.6, 0.6);
        if (!(dd_of(CaseTag::RC, a, rb, k) > 1e-6)) continue;
        return {rc_template_a(a), rc_template_b(rb, k), CaseTag::RC, a, rb, k, 0.0};
    }
}

/// RR.2.2.B pair (K < -1; D > 0 automatic) with contraction filter.
inline SamplePair sample_rr22b(Rng& rng, double rho_min = 0.0, double rho_max = 0.995) {
    while (true) {
        const double a = uni(rng, 1.05, 3.0);
        const double b = uni(rng, 1.05, 3.0);
        const double kk = uni(rng, -4.0, -1.05);
        const double rho = rho_rr(a, b, kk);
        if (!(rho > rho_min && rho < rho_max)) continue;
        return {rr_template_a(a), rr_template_b(b, kk), CaseTag::RR, a, b, kk, rho};
    }
}

/// RR.1 pair (D < 0): GUES without rotation.
inline SamplePair sample_rr1(Rng& rng) {
    while (true) {
        const double a = uni(rng, 1.05, 2.0);
        const double b = uni(rng, 1.05, 2.0);
        const double kk = uni(rng, 1.05, 4.0);  // |K| > 1 holds in RR.1
        if (!(dd_of(CaseTag::RR, a, b, kk) < -1e-6)) continue;
        return {rr_template_a(a), rr_template_b(b, kk), CaseTag::RR, a, b, kk, 0.0};
    }
}

/// RR.2.2.A pair (-1 < K < ab, D > 0): GUES.
inline SamplePair sample_rr22a(Rng& rng) {
    while (true) {
        const double a = uni(rng, 1.2, 3.0);
        const double b = uni(rng, 1.2, 3.0);
        const double kk = uni(rng, -0.95, a * b - 0.05);
        if (std::abs(kk - 1.0) < 0.05 || std::abs(kk + 1.0) < 0.05) continue;
        if (!(dd_of(CaseTag::RR, a, b, kk) > 1e-6)) continue;
        return {rr_template_a(a), rr_template_b(b, kk), CaseTag::RR, a, b, kk, 0.0};
    }
}

/// Uniformly random Hurwitz-pair satisfying H1-H4 (rejection from raw entries).
inline SamplePair sample_h14(Rng& rng) {
    const Tolerances tol;
    while (true) {
        Mat2 a{uni(rng, -2, 2), uni(rng, -2, 2), uni(rng, -2, 2), uni(rng, -2, 2)};
        Mat2 b{uni(rng, -2, 2), uni(rng, -2, 2), uni(rng, -2, 2), uni(rng, -2, 2)};
        if (!a.hurwitz() || !b.hurwitz()) continue;
        const HypothesisReport rep = hypotheses(a, b, tol);
        if (!rep.all()) continue;
        SamplePair s;
        s.a = a;
        s.b = b;
        const Invariants inv = invariants(a, b, tol);
        s.tag = inv.case_tag;
        s.rho_a = inv.rho_a.value;
        s.rho_b = inv.rho_b.value;
        s.kappa = inv.kappa.value;
        return s;
    }
}

/// A GUES pair from one of the GUES subcases, index-driven for coverage.
inline SamplePair sample_gues_any(Rng& rng, int which, double decay_floor = 0.25) {
    // decay_floor keeps the value-function iteration count reasonable
    switch (which % 6) {
        case 0: {
            SamplePair s = sample_cc22(rng, 0.0, 0.6);
            if (std::min(s.rho_a, s.rho_b) < decay_floor) return sample_gues_any(rng, 0, decay_floor);
            return s;
        }
        case 1: {
            SamplePair s = sample_cc1(rng);
            if (std::min(s.rho_a, s.rho_b) < decay_floor) return sample_gues_any(rng, 1, decay_floor);
            return s;
        }
        case 2: return sample_rc22b(rng, 0.0, 0.6);
        case 3: return sample_rc1(rng);
        case 4: return sample_rr22b(rng, 0.0, 0.6);
        default: return sample_rr22a(rng);
    }
}

}  // namespace swl2d::testgen
