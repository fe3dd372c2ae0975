#include "swl2d/core2d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace swl2d {

namespace {

std::array<Complex, 2> eigenvector_for(const Mat2& m, Complex lambda) {
    // Rows of (M - lambda I) are orthogonal complements of the eigenvector;
    // pick the candidate built from the larger row.
    const Complex r1[2] = {Complex(m.a12), lambda - Complex(m.a11)};
    const Complex r2[2] = {lambda - Complex(m.a22), Complex(m.a21)};
    const double n1 = std::abs(r1[0]) + std::abs(r1[1]);
    const double n2 = std::abs(r2[0]) + std::abs(r2[1]);
    std::array<Complex, 2> v;
    if (n1 >= n2) {
        v = {r1[0], r1[1]};
    } else {
        v = {r2[0], r2[1]};
    }
    const double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    if (nv == 0.0) return {Complex(1.0), Complex(0.0)};  // scalar matrix
    return {v[0] / nv, v[1] / nv};
}

}  // namespace

Spectrum2 spectrum(const Mat2& m, const Tolerances& tol) {
    Spectrum2 sp;
    const double mu = 0.5 * m.trace();
    const double det = m.det();
    const double disc = mu * mu - det;
    const double scale = std::max({std::abs(mu), std::sqrt(std::abs(det)), 1e-300});

    if (disc < -(tol.tol_eig_coincide * scale) * (tol.tol_eig_coincide * scale)) {
        const double w = std::sqrt(-disc);
        sp.is_real = false;
        sp.lambda1 = Complex(mu, w);
        sp.lambda2 = Complex(mu, -w);  // Im(lambda2) < 0
        sp.is_diagonalizable = true;
    } else if (disc > (tol.tol_eig_coincide * scale) * (tol.tol_eig_coincide * scale)) {
        const double w = std::sqrt(disc);
        // stable quadratic roots: big root first, small via the product
        const double big = (mu >= 0.0) ? mu + w : mu - w;
        const double small = (big != 0.0) ? det / big : mu - std::copysign(w, mu);
        sp.is_real = true;
        double l1 = small, l2 = big;  // |l2| >= |l1| by construction
        if (std::abs(std::abs(l1) - std::abs(l2)) <=
            tol.tol_eig_coincide * std::max(std::abs(l1), std::abs(l2))) {
            // |l1| == |l2| with l1 != l2: the labeling convention is ambiguous
            sp.degenerate_ordering = true;
        }
        sp.lambda1 = Complex(l1);
        sp.lambda2 = Complex(l2);
        sp.is_diagonalizable = true;
    } else {
        // coincident eigenvalues
        sp.is_real = true;
        sp.lambda1 = sp.lambda2 = Complex(mu);
        const Mat2 n = m - Mat2::scalar(mu);
        sp.is_diagonalizable = n.max_abs() <= tol.tol_eig_coincide * std::max(m.max_abs(), 1e-300);
    }
    sp.v1 = eigenvector_for(m, sp.lambda1);
    sp.v2 = eigenvector_for(m, sp.lambda2);
    sp.hurwitz = m.trace() < 0.0 && det > 0.0;
    return sp;
}

Spectrum2 eig2(const Mat2& m, const Tolerances& tol) {
    if (!m.all_finite()) throw SwlError(ErrorCode::InvalidInput, "eig2: non-finite entries");
    Spectrum2 sp = spectrum(m, tol);
    if (sp.degenerate_ordering) {
        throw SwlError(ErrorCode::DegenerateOrdering,
                       "eig2: real eigenvalues of equal magnitude and opposite sign; "
                       "labeling convention does not apply");
    }
    return sp;
}

const char* hypothesis_failure_name(HypothesisFailure f) {
    switch (f) {
        case HypothesisFailure::None: return "none";
        case HypothesisFailure::NonHurwitz: return "non-Hurwitz";
        case HypothesisFailure::Commuting: return "commuting";
        case HypothesisFailure::NonDiagonalizable: return "non-diagonalizable";
        case HypothesisFailure::SharedEigenvector: return "shared-eigenvector";
        case HypothesisFailure::EigenvalueMultiplicity: return "eigenvalue-multiplicity";
    }
    return "?";
}

const char* case_tag_name(CaseTag c) {
    switch (c) {
        case CaseTag::CC: return "CC";
        case CaseTag::RC: return "RC";
        case CaseTag::RR: return "RR";
    }
    return "?";
}

namespace {

bool projectively_equal(const std::array<Complex, 2>& u, const std::array<Complex, 2>& v,
                        double tol) {
    // both inputs are unit-normalized; the cross product vanishes iff they
    // span the same complex line
    const Complex cr = u[0] * v[1] - u[1] * v[0];
    return std::abs(cr) <= tol;
}

}  // namespace

HypothesisReport hypotheses(const Mat2& a, const Mat2& b, const Tolerances& tol) {
    HypothesisReport rep;
    const Spectrum2 sa = spectrum(a, tol);
    const Spectrum2 sb = spectrum(b, tol);

    rep.h1 = sa.hurwitz && sb.hurwitz;

    const double comm_scale = std::max(a.max_abs(), b.max_abs());
    rep.h2 = commutator(a, b).max_abs() > tol.tol_commute * comm_scale * comm_scale;

    rep.h3 = sa.is_diagonalizable && sb.is_diagonalizable;

    rep.h4 = true;
    if (rep.h3) {
        for (const auto& va : {sa.v1, sa.v2}) {
            for (const auto& vb : {sb.v1, sb.v2}) {
                if (projectively_equal(va, vb, tol.tol_eigvec)) rep.h4 = false;
            }
        }
    }

    if (!rep.h1) {
        rep.failure_detail = HypothesisFailure::NonHurwitz;
    } else if (!rep.h2) {
        rep.failure_detail = HypothesisFailure::Commuting;
    } else if (!rep.h3) {
        rep.failure_detail = HypothesisFailure::NonDiagonalizable;
    } else if (sa.degenerate_ordering || sb.degenerate_ordering) {
        rep.failure_detail = HypothesisFailure::EigenvalueMultiplicity;
    } else if (!rep.h4) {
        rep.failure_detail = HypothesisFailure::SharedEigenvector;
    }
    return rep;
}

double dd_of(CaseTag c, double rho_a, double rho_b, double kappa) {
    switch (c) {
        case CaseTag::CC:
            return kappa * kappa + 2.0 * rho_a * rho_b * kappa -
                   (1.0 + rho_a * rho_a + rho_b * rho_b);
        case CaseTag::RC:
            // rho_a = rho_A/i of the real-eigenvalue matrix, kappa = K/i
            return rho_a * rho_a - kappa * kappa - 2.0 * rho_a * kappa * rho_b - 1.0 -
                   rho_b * rho_b;
        case CaseTag::RR:
            return kappa * kappa - 2.0 * rho_a * rho_b * kappa + rho_a * rho_a +
                   rho_b * rho_b - 1.0;
    }
    return 0.0;
}

Invariants invariants(const Mat2& a, const Mat2& b, const Tolerances& tol) {
    const HypothesisReport rep = hypotheses(a, b, tol);
    if (!rep.all()) {
        std::ostringstream os;
        os << "invariants: hypotheses H1-H4 violated (" << hypothesis_failure_name(rep.failure_detail)
           << ")";
        throw HypothesesViolated(rep, os.str());
    }
    const Spectrum2 sa = eig2(a, tol);
    const Spectrum2 sb = eig2(b, tol);

    // rho = -i (l1+l2)/(l1-l2) evaluates to -m/w in both eigenvalue cases,
    // with the tag carrying the real-vs-imaginary convention.
    auto make_rho = [](const Spectrum2& s) {
        Rho r;
        r.kind = s.is_real ? Rho::Kind::Real : Rho::Kind::Complex;
        r.value = -s.half_trace() / s.half_gap();
        return r;
    };

    Invariants inv;
    inv.rho_a = make_rho(sa);
    inv.rho_b = make_rho(sb);

    // K = 2 (Tr(AB) - Tr(A)Tr(B)/2) / ((l1-l2)(l3-l4)); the denominator is
    // 2w (real case) or 2iw (complex case) per matrix.
    const double g = (a * b).trace() - 0.5 * a.trace() * b.trace();
    const double ww = 2.0 * sa.half_gap() * sb.half_gap();

    if (!sa.is_real && !sb.is_real) {
        inv.case_tag = CaseTag::CC;
        inv.kappa = {Kappa::Kind::Real, -g / ww};
    } else if (sa.is_real && sb.is_real) {
        inv.case_tag = CaseTag::RR;
        inv.kappa = {Kappa::Kind::Real, g / ww};
    } else {
        inv.case_tag = CaseTag::RC;
        inv.kappa = {Kappa::Kind::Imaginary, -g / ww};
        const double rr = sa.is_real ? inv.rho_a.value : inv.rho_b.value;  // real one
        const double rc = sa.is_real ? inv.rho_b.value : inv.rho_a.value;  // complex one
        inv.chi = -(rr * inv.kappa.value + rc);
    }
    inv.dd = dd_of(inv.case_tag,
                   inv.case_tag == CaseTag::RC && !sa.is_real ? inv.rho_b.value : inv.rho_a.value,
                   inv.case_tag == CaseTag::RC && !sa.is_real ? inv.rho_a.value : inv.rho_b.value,
                   inv.kappa.value);
    return inv;
}

}  // namespace swl2d
