#pragma once

#include <optional>

#include "swl2d/core2d.hpp"

namespace swl2d {

enum class Outcome { Gues, MarginallyStable, Unstable, UnsupportedClosedForm };

enum class Subcase {
    CC1, CC21, CC22, CC3,
    RC1, RC21, RC22A, RC22B, RC3,
    RR1, RR21, RR22A, RR22B, RR3,
    Commuting, SharedEigenvector, NonDiagonalizable,
    NonHurwitzInput,
};

const char* outcome_name(Outcome o);
const char* subcase_name(Subcase s);

struct Verdict {
    Outcome outcome = Outcome::Gues;
    Subcase subcase = Subcase::CC1;
    std::optional<double> contraction;          // CC.2.2 / RC.2.2.B / RR.2.2.B only
    std::optional<Invariants> invariants;       // present when the case tree ran
    std::optional<double> destabilizing_u;      // a constant control losing Hurwitzness
    bool near_boundary = false;                 // classified inside the tolerance band
    bool swapped = false;                       // RC pair canonicalized by swapping
};

/// Contraction factor over one half turn of the worst trajectory, CC case.
/// Requires case CC, D > 0, K > 1; throws DomainError otherwise.
double rho_cc(const Invariants& inv);
double rho_cc(double rho_a, double rho_b, double kappa);

/// RC case data: besides the factor itself, the collinearity-line slopes and
/// the two switching times are exposed for cross-checks against the
/// trajectory oracle.
struct RcData {
    double rho;
    double m_plus, m_minus;
    double t1;     // duration of the arc of the real-eigenvalue field
    double t_bar;  // duration of the complex-field arc, in (0, pi)
};

/// Requires case RC, D < 0, chi < 0, K/i > 0 (real-eigenvalue matrix first).
RcData rho_rc_data(const Invariants& inv);
RcData rho_rc_data(double a, double rho_b, double k);
double rho_rc(const Invariants& inv);

/// Requires case RR, D > 0, K < -1 (and K below the product bound).
double rho_rr(const Invariants& inv);
double rho_rr(double a, double b, double kappa);

/// The constant control u in [0,1] for which M(u) = uA + (1-u)B is not
/// Hurwitz, if one exists. Exact: trace and det are polynomials in u of
/// degree <= 2, tested via root isolation rather than sampling.
std::optional<double> non_hurwitz_u(const Mat2& a, const Mat2& b);

/// Full closed-form stability decision for the pair.
Verdict classify(const Mat2& a, const Mat2& b, const Tolerances& tol = {});

}  // namespace swl2d
