#pragma once

#include <complex>
#include <optional>

#include "swl2d/errors.hpp"
#include "swl2d/tolerances.hpp"
#include "swl2d/vec2.hpp"

namespace swl2d {

using Complex = std::complex<double>;

/// Spectral data of a 2x2 matrix with the labeling convention used
/// throughout: for real eigenvalues |lambda2| > |lambda1|, for complex ones
/// Im(lambda2) < 0.
struct Spectrum2 {
    Complex lambda1, lambda2;
    std::array<Complex, 2> v1, v2;  // eigenvectors, defined up to complex scale
    bool is_real = false;
    bool is_diagonalizable = true;
    bool hurwitz = false;
    bool degenerate_ordering = false;  // real, |l1| == |l2|, l1 != l2

    double half_trace() const { return 0.5 * (lambda1 + lambda2).real(); }
    /// Half the eigenvalue gap: w > 0 with lambda = m +- w (real) or m +- iw.
    double half_gap() const {
        return is_real ? 0.5 * std::abs((lambda1 - lambda2).real())
                       : std::abs(lambda1.imag());
    }
};

/// Non-throwing spectral decomposition (degeneracies flagged, not rejected).
Spectrum2 spectrum(const Mat2& m, const Tolerances& tol = {});

/// Spectral decomposition enforcing the labeling convention; throws
/// DegenerateOrdering when the real-eigenvalue tie makes the labels ambiguous.
Spectrum2 eig2(const Mat2& m, const Tolerances& tol = {});

enum class HypothesisFailure {
    None,
    NonHurwitz,
    Commuting,
    NonDiagonalizable,
    SharedEigenvector,
    EigenvalueMultiplicity,
};

struct HypothesisReport {
    bool h1 = false;  // both Hurwitz
    bool h2 = false;  // [A,B] != 0
    bool h3 = false;  // both diagonalizable over C
    bool h4 = false;  // no shared eigenvector
    HypothesisFailure failure_detail = HypothesisFailure::None;

    bool all() const { return h1 && h2 && h3 && h4; }
};

const char* hypothesis_failure_name(HypothesisFailure f);

/// Checks H1-H4 on a pair. Reports, never rejects.
HypothesisReport hypotheses(const Mat2& a, const Mat2& b, const Tolerances& tol = {});

/// rho of a single matrix. Complex-eigenvalue case stores rho itself
/// (positive); real case stores rho/i (> 1 under Hurwitz + distinctness).
struct Rho {
    enum class Kind { Complex, Real };
    Kind kind = Kind::Complex;
    double value = 0.0;
};

/// K is real in the CC and RR cases, imaginary in the RC case; the imaginary
/// case stores K/i so downstream formulas stay real.
struct Kappa {
    enum class Kind { Real, Imaginary };
    Kind kind = Kind::Real;
    double value = 0.0;
};

enum class CaseTag { CC, RC, RR };

const char* case_tag_name(CaseTag c);

/// Coordinate-invariant parameters of a pair. rho_a/rho_b follow the input
/// order; chi (RC only) always puts the real-eigenvalue matrix first, which
/// is the convention its defining formula assumes.
struct Invariants {
    Rho rho_a, rho_b;
    Kappa kappa;
    double dd = 0.0;
    std::optional<double> chi;
    CaseTag case_tag = CaseTag::CC;
};

class HypothesesViolated : public SwlError {
public:
    HypothesesViolated(const HypothesisReport& rep, const std::string& what)
        : SwlError(ErrorCode::HypothesesViolated, what), report_(rep) {}
    const HypothesisReport& report() const { return report_; }

private:
    HypothesisReport report_;
};

/// Invariant parameters from a pair satisfying H1-H4.
/// Throws HypothesesViolated otherwise, DegenerateOrdering if labeling fails.
Invariants invariants(const Mat2& a, const Mat2& b, const Tolerances& tol = {});

/// D as a function of the real-convention parameters, per eigenvalue case.
double dd_of(CaseTag c, double rho_a, double rho_b, double kappa);

}  // namespace swl2d
