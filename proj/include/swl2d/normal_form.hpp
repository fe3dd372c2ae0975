#pragma once

#include "swl2d/core2d.hpp"

namespace swl2d {

/// Change of coordinates T and positive scalings putting an H1-H4 pair into
/// the case normal forms. a_nf/b_nf are in the canonical order (in RC the
/// real-eigenvalue matrix sits in the 'a' slot; `swapped` records whether
/// that reversed the inputs). The defining relation is
///   T^-1 * (first) * T / alpha_a == a_nf,   T^-1 * (second) * T / alpha_b == b_nf,
/// where (first, second) is the input pair after the canonical swap.
struct NormalForm {
    Mat2 t;
    double alpha_a = 1.0, alpha_b = 1.0;
    Mat2 a_nf, b_nf;
    CaseTag case_tag = CaseTag::CC;
    bool swapped = false;

    // normal-form parameters (real conventions): CC uses rho_a, rho_b, e;
    // RC uses rho_a = rho/i of the real matrix, rho_b, kappa = K/i;
    // RR uses rho_a, rho_b (both rho/i) and real kappa.
    double rho_a = 0.0, rho_b = 0.0, kappa = 0.0, e = 0.0;
};

/// Build the case normal-form templates from parameters.
Mat2 cc_template_a(double rho_a, double e);
Mat2 cc_template_b(double rho_b);
Mat2 rc_template_a(double a);
Mat2 rc_template_b(double rho_b, double k);
Mat2 rr_template_a(double a);
Mat2 rr_template_b(double b, double kappa);

/// Compute the change of coordinates; throws HypothesesViolated when H1-H4
/// fail and DegenerateOrdering when the labeling convention does not apply.
NormalForm to_normal_form(const Mat2& a, const Mat2& b, const Tolerances& tol = {});

}  // namespace swl2d
