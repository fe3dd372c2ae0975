#include "swl2d/classifier.hpp"

#include <cmath>
#include <sstream>

namespace swl2d {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Gues: return "GUES";
        case Outcome::MarginallyStable: return "MarginallyStable";
        case Outcome::Unstable: return "Unstable";
        case Outcome::UnsupportedClosedForm: return "UnsupportedClosedForm";
    }
    return "?";
}

const char* subcase_name(Subcase s) {
    switch (s) {
        case Subcase::CC1: return "CC.1";
        case Subcase::CC21: return "CC.2.1";
        case Subcase::CC22: return "CC.2.2";
        case Subcase::CC3: return "CC.3";
        case Subcase::RC1: return "RC.1";
        case Subcase::RC21: return "RC.2.1";
        case Subcase::RC22A: return "RC.2.2.A";
        case Subcase::RC22B: return "RC.2.2.B";
        case Subcase::RC3: return "RC.3";
        case Subcase::RR1: return "RR.1";
        case Subcase::RR21: return "RR.2.1";
        case Subcase::RR22A: return "RR.2.2.A";
        case Subcase::RR22B: return "RR.2.2.B";
        case Subcase::RR3: return "RR.3";
        case Subcase::Commuting: return "Commuting";
        case Subcase::SharedEigenvector: return "SharedEigenvector";
        case Subcase::NonDiagonalizable: return "NonDiagonalizable";
        case Subcase::NonHurwitzInput: return "NonHurwitzInput";
    }
    return "?";
}

double rho_cc(double rho_a, double rho_b, double kappa) {
    const double d = dd_of(CaseTag::CC, rho_a, rho_b, kappa);
    if (!(d > 0.0) || !(kappa > 1.0)) {
        throw SwlError(ErrorCode::DomainError, "rho_cc: requires CC with D > 0 and K > 1");
    }
    const double sd = std::sqrt(d);
    const double expo = -rho_a * std::atan((-rho_a * kappa + rho_b) / sd) -
                        rho_b * std::atan((rho_a - rho_b * kappa) / sd) -
                        0.5 * M_PI * (rho_a + rho_b);
    const double p = rho_a * rho_b + kappa;
    return std::exp(expo) * std::sqrt((p + sd) / (p - sd));
}

namespace {

/// RC canonical view: (a, rho_b, k) with the real-eigenvalue rho first.
struct RcView {
    double a, rho_b, k;
};

RcView rc_view(const Invariants& inv) {
    if (inv.case_tag != CaseTag::RC) {
        throw SwlError(ErrorCode::DomainError, "expected an RC-case invariant tuple");
    }
    if (inv.rho_a.kind == Rho::Kind::Real) return {inv.rho_a.value, inv.rho_b.value, inv.kappa.value};
    return {inv.rho_b.value, inv.rho_a.value, inv.kappa.value};
}

}  // namespace

double rho_cc(const Invariants& inv) {
    if (inv.case_tag != CaseTag::CC) {
        throw SwlError(ErrorCode::DomainError, "rho_cc: expected a CC-case invariant tuple");
    }
    return rho_cc(inv.rho_a.value, inv.rho_b.value, inv.kappa.value);
}

RcData rho_rc_data(double a, double rho_b, double k) {
    const double d = dd_of(CaseTag::RC, a, rho_b, k);
    const double chi = -(a * k + rho_b);
    if (!(d < 0.0) || !(chi < 0.0) || !(k > 0.0)) {
        throw SwlError(ErrorCode::DomainError,
                       "rho_rc: requires RC with D < 0, chi < 0 and K/i > 0");
    }
    const double sd = std::sqrt(-d);
    const double s1k = std::sqrt(1.0 + k * k);
    const double den = (-a - 1.0) * s1k;
    RcData r;
    r.m_plus = (-chi + sd) / den;
    r.m_minus = (-chi - sd) / den;
    r.t1 = 0.5 * std::log(r.m_plus / r.m_minus);
    r.t_bar = std::acos((-a + rho_b * k) / std::sqrt((1.0 + k * k) * (1.0 + rho_b * rho_b)));
    r.rho = std::pow(r.m_plus / r.m_minus, -0.5 * (a - 1.0)) * std::exp(-rho_b * r.t_bar) *
            (s1k * r.m_minus * std::sin(r.t_bar) -
             (std::cos(r.t_bar) - k * std::sin(r.t_bar)));
    return r;
}

RcData rho_rc_data(const Invariants& inv) {
    const RcView v = rc_view(inv);
    return rho_rc_data(v.a, v.rho_b, v.k);
}

double rho_rc(const Invariants& inv) { return rho_rc_data(inv).rho; }

double rho_rr(double a, double b, double kappa) {
    const double d = dd_of(CaseTag::RR, a, b, kappa);
    if (!(d > 0.0) || !(kappa < -1.0) || !(kappa < a * b)) {
        throw SwlError(ErrorCode::DomainError,
                       "rho_rr: requires RR with D > 0, K < -1 and K below the product bound");
    }
    const double sd = std::sqrt(d);
    const double fsym = (1.0 + a + b + kappa - sd) / (1.0 + a + b + kappa + sd);
    const double fasym_ab = std::pow((b - kappa * a - sd) / (b - kappa * a + sd), 0.5 * (a - 1.0));
    const double fasym_ba = std::pow((a - kappa * b - sd) / (a - kappa * b + sd), 0.5 * (b - 1.0));
    return -fsym * fasym_ab * fasym_ba;
}

double rho_rr(const Invariants& inv) {
    if (inv.case_tag != CaseTag::RR) {
        throw SwlError(ErrorCode::DomainError, "rho_rr: expected an RR-case invariant tuple");
    }
    return rho_rr(inv.rho_a.value, inv.rho_b.value, inv.kappa.value);
}

std::optional<double> non_hurwitz_u(const Mat2& a, const Mat2& b) {
    // M(u) = B + u(A - B); trace is linear in u, det quadratic.
    const double tr0 = b.trace();
    const double tr1 = a.trace() - b.trace();
    if (tr0 >= 0.0) return 0.0;
    if (tr0 + tr1 >= 0.0) return 1.0;

    const Mat2 c = a - b;
    const double q0 = b.det();
    const double q1 = b.a11 * c.a22 + c.a11 * b.a22 - b.a12 * c.a21 - c.a12 * b.a21;
    const double q2 = c.det();
    if (q0 <= 0.0) return 0.0;
    if (q0 + q1 + q2 <= 0.0) return 1.0;
    if (q2 > 0.0) {
        const double ustar = -q1 / (2.0 * q2);
        if (ustar > 0.0 && ustar < 1.0) {
            const double qmin = q0 + ustar * (q1 + q2 * ustar);
            if (qmin <= 0.0) return ustar;
        }
    }
    return std::nullopt;
}

namespace {

Verdict with_contraction(Verdict v, double rho, double band) {
    v.contraction = rho;
    if (std::abs(rho - 1.0) <= band) {
        v.outcome = Outcome::MarginallyStable;
        v.near_boundary = true;
    } else if (rho < 1.0) {
        v.outcome = Outcome::Gues;
    } else {
        v.outcome = Outcome::Unstable;
    }
    return v;
}

}  // namespace

Verdict classify(const Mat2& a, const Mat2& b, const Tolerances& tol) {
    const HypothesisReport rep = hypotheses(a, b, tol);
    Verdict v;

    if (!rep.h1) {
        v.outcome = Outcome::Unstable;
        v.subcase = Subcase::NonHurwitzInput;
        v.destabilizing_u = a.hurwitz() ? 0.0 : 1.0;
        return v;
    }
    if (!rep.h2) {
        v.outcome = Outcome::Gues;
        v.subcase = Subcase::Commuting;
        return v;
    }
    if (!rep.h3) {
        v.subcase = Subcase::NonDiagonalizable;
        if (auto u = non_hurwitz_u(a, b)) {
            v.outcome = Outcome::Unstable;
            v.destabilizing_u = u;
        } else {
            v.outcome = Outcome::UnsupportedClosedForm;
        }
        return v;
    }
    if (!rep.h4) {
        v.outcome = Outcome::Gues;
        v.subcase = Subcase::SharedEigenvector;
        return v;
    }

    Invariants inv = invariants(a, b, tol);
    if (inv.case_tag == CaseTag::RC && inv.rho_a.kind == Rho::Kind::Complex) {
        inv = invariants(b, a, tol);  // canonical RC order: real eigenvalues first
        v.swapped = true;
    }
    v.invariants = inv;

    const double ra = inv.rho_a.value;
    const double rb = inv.rho_b.value;
    const double kk = inv.kappa.value;
    const double d = inv.dd;
    // absolute band, scaled by the magnitude of the terms entering D
    const double d_band =
        tol.boundary_tol * std::max(1.0, kk * kk + std::abs(2 * ra * rb * kk) + ra * ra + rb * rb);

    switch (inv.case_tag) {
        case CaseTag::CC: {
            if (std::abs(d) <= d_band) {
                v.subcase = Subcase::CC3;
                v.near_boundary = true;
                v.outcome = kk > 1.0 ? Outcome::Gues : Outcome::MarginallyStable;
            } else if (d < 0.0) {
                v.subcase = Subcase::CC1;
                v.outcome = Outcome::Gues;
            } else if (kk < -1.0) {
                v.subcase = Subcase::CC21;
                v.outcome = Outcome::Unstable;
                v.destabilizing_u = non_hurwitz_u(a, b);
            } else {
                v.subcase = Subcase::CC22;
                v = with_contraction(v, rho_cc(inv), tol.boundary_tol);
            }
            break;
        }
        case CaseTag::RC: {
            const double chi = *inv.chi;
            if (std::abs(d) <= d_band) {
                v.subcase = Subcase::RC3;
                v.near_boundary = true;
                v.outcome = chi < 0.0 ? Outcome::Gues : Outcome::MarginallyStable;
            } else if (d > 0.0) {
                v.subcase = Subcase::RC1;
                v.outcome = Outcome::Gues;
            } else if (chi > 0.0) {
                v.subcase = Subcase::RC21;
                v.outcome = Outcome::Unstable;
                v.destabilizing_u = non_hurwitz_u(a, b);
            } else if (kk <= 0.0) {
                v.subcase = Subcase::RC22A;
                v.outcome = Outcome::Gues;
            } else {
                v.subcase = Subcase::RC22B;
                v = with_contraction(v, rho_rc(inv), tol.boundary_tol);
            }
            break;
        }
        case CaseTag::RR: {
            const double bound = ra * rb;  // -rho_A rho_B in the real convention
            if (std::abs(d) <= d_band) {
                v.subcase = Subcase::RR3;
                v.near_boundary = true;
                v.outcome = kk < bound ? Outcome::Gues : Outcome::MarginallyStable;
            } else if (d < 0.0) {
                v.subcase = Subcase::RR1;
                v.outcome = Outcome::Gues;
            } else if (kk > bound) {
                v.subcase = Subcase::RR21;
                v.outcome = Outcome::Unstable;
                v.destabilizing_u = non_hurwitz_u(a, b);
            } else if (kk > -1.0) {
                v.subcase = Subcase::RR22A;
                v.outcome = Outcome::Gues;
            } else {
                v.subcase = Subcase::RR22B;
                v = with_contraction(v, rho_rr(inv), tol.boundary_tol);
            }
            break;
        }
    }
    return v;
}

}  // namespace swl2d
