#include "swl2d/normal_form.hpp"

#include <cmath>

namespace swl2d {

Mat2 cc_template_a(double rho_a, double e) { return {-rho_a, -1.0 / e, e, -rho_a}; }
Mat2 cc_template_b(double rho_b) { return {-rho_b, -1.0, 1.0, -rho_b}; }
Mat2 rc_template_a(double a) { return {-a + 1.0, 0.0, 0.0, -a - 1.0}; }
Mat2 rc_template_b(double rho_b, double k) {
    const double s = std::sqrt(1.0 + k * k);
    return {-rho_b - k, -s, s, -rho_b + k};
}
Mat2 rr_template_a(double a) { return {-a + 1.0, 0.0, 0.0, -a - 1.0}; }
Mat2 rr_template_b(double b, double kappa) {
    return {kappa - b, 1.0 - kappa, 1.0 + kappa, -kappa - b};
}

namespace {

/// Deterministic scale/sign normalization of T; conjugation is unaffected.
Mat2 normalize_t(Mat2 t) {
    const double d = std::sqrt(std::abs(t.det()));
    t = t / d;
    if (t.a11 < 0.0 || (t.a11 == 0.0 && t.a21 < 0.0)) t = t * -1.0;
    return t;
}

Mat2 columns(Vec2 c1, Vec2 c2) { return {c1.x, c2.x, c1.y, c2.y}; }

/// Real basis [v_i | v_r] from the eigenvector of the eigenvalue with
/// positive imaginary part; in it the matrix becomes mu*I + w*J.
Mat2 rotation_basis(const Spectrum2& sp) {
    const auto& v = sp.v1;  // lambda1 has Im > 0 by the labeling convention
    const Vec2 vr{v[0].real(), v[1].real()};
    const Vec2 vi{v[0].imag(), v[1].imag()};
    return columns(vi, vr);
}

/// Eigenbasis [w1 | w2] of a real-diagonalizable matrix, lambda1 first.
Mat2 eigen_basis(const Spectrum2& sp) {
    const Vec2 w1{sp.v1[0].real(), sp.v1[1].real()};
    const Vec2 w2{sp.v2[0].real(), sp.v2[1].real()};
    return columns(w1 / w1.norm(), w2 / w2.norm());
}

Mat2 rotation(double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return {c, -s, s, c};
}

}  // namespace

NormalForm to_normal_form(const Mat2& a_in, const Mat2& b_in, const Tolerances& tol) {
    const HypothesisReport rep = hypotheses(a_in, b_in, tol);
    if (!rep.all()) {
        throw HypothesesViolated(rep, "to_normal_form: hypotheses H1-H4 violated");
    }

    NormalForm nf;
    Spectrum2 sa = eig2(a_in, tol);
    Spectrum2 sb = eig2(b_in, tol);
    Mat2 a = a_in, b = b_in;

    if (sa.is_real && !sb.is_real) {
        nf.case_tag = CaseTag::RC;
    } else if (!sa.is_real && sb.is_real) {
        nf.case_tag = CaseTag::RC;
        nf.swapped = true;
        std::swap(a, b);
        std::swap(sa, sb);
    } else {
        nf.case_tag = sa.is_real ? CaseTag::RR : CaseTag::CC;
    }

    // after the canonical swap the 'a' slot of inv matches our local a
    const Invariants inv = nf.swapped ? invariants(b_in, a_in, tol) : invariants(a_in, b_in, tol);
    nf.rho_a = inv.rho_a.value;
    nf.rho_b = inv.rho_b.value;
    nf.kappa = inv.kappa.value;

    if (nf.case_tag == CaseTag::CC) {
        // basis from B's eigenvector puts B in -rho_B*I + J form
        nf.alpha_a = sa.half_gap();
        nf.alpha_b = sb.half_gap();
        const Mat2 p = rotation_basis(sb);
        const Mat2 pinv = p.inverse();
        const Mat2 a1 = (pinv * a * p) / nf.alpha_a;

        // residual rotation: align the traceless part of A1 with the template
        const Mat2 n = a1 + Mat2::scalar(nf.rho_a);
        const double pp = 0.5 * (n.a11 - n.a22);
        const double mm = 0.5 * (n.a12 + n.a21);
        const double cj = 0.5 * (n.a21 - n.a12);
        const double psi = std::atan2(pp, mm);
        const double phi = cj >= 0.0 ? -0.5 * psi : 0.5 * (M_PI - psi);
        const Mat2 r = rotation(phi);

        nf.e = cj + std::copysign(std::hypot(pp, mm), cj);
        nf.t = normalize_t(p * r);
        nf.a_nf = (nf.t.inverse() * a * nf.t) / nf.alpha_a;
        nf.b_nf = (nf.t.inverse() * b * nf.t) / nf.alpha_b;
        return nf;
    }

    // RC and RR share the structure: diagonalize A, then fix the off-diagonal
    // of B1 with a diagonal scaling. The required (1,2) entry is -sqrt(1+k^2)
    // (RC) or 1-K (RR); the (2,1) entry then comes out right automatically.
    nf.alpha_a = sa.half_gap();
    nf.alpha_b = sb.half_gap();
    const Mat2 t0 = eigen_basis(sa);
    const Mat2 b1 = (t0.inverse() * b * t0) / nf.alpha_b;

    const double target12 = nf.case_tag == CaseTag::RC ? -std::sqrt(1.0 + nf.kappa * nf.kappa)
                                                       : 1.0 - nf.kappa;
    if (std::abs(b1.a12) <= 1e-13 * b1.max_abs()) {
        throw SwlError(ErrorCode::DomainError,
                       "to_normal_form: B is triangular in A's eigenbasis (H4 boundary)");
    }
    const double d_over_c = target12 / b1.a12;
    nf.t = normalize_t(t0 * Mat2{1.0, 0.0, 0.0, d_over_c});
    nf.a_nf = (nf.t.inverse() * a * nf.t) / nf.alpha_a;
    nf.b_nf = (nf.t.inverse() * b * nf.t) / nf.alpha_b;
    return nf;
}

}  // namespace swl2d
