#pragma once

#include <vector>

#include "swl2d/angular.hpp"
#include "swl2d/core2d.hpp"
#include "swl2d/degree_scan.hpp"

namespace swl2d {

/// Level-set CLF V(x) = |x| / r_tilde(angle(x)): degree-1 homogeneous, its
/// unit ball bounded by the closed worst trajectory of the rescaled
/// marginal pair (a_tilde, b_tilde).
struct LevelSetCLF {
    AngularFunction r_tilde;
    double zeta = 0.0;
    Mat2 a_tilde, b_tilde;

    double evaluate(Vec2 x) const { return x.norm() / r_tilde(x.angle()); }
};

/// Sum-of-even-powers CLF W(x) = sum_k (w_k . x)^(2p). Evaluation factors
/// out the largest |w_k . x| so large powers stay in range.
struct PolyCLF {
    std::vector<Vec2> forms;  // w_k
    int power = 2;            // 2p
    std::vector<double> coefficients;  // expanded monomials (power <= 64), else empty

    double evaluate(Vec2 x) const;
    /// Sign-stable directional derivative test: the sign of grad W(x) . y,
    /// returned as the scaled sum with max_k |w_k . x| factored out.
    double scaled_derivative(Vec2 x, Vec2 y) const;
    double evaluate_by_coefficients(Vec2 x) const;
};

/// Piecewise-linear CLF max_k |w_k . x|.
struct PolytopeCLF {
    std::vector<Vec2> forms;

    double evaluate(Vec2 x) const;
};

/// zeta-rescaled level-set construction. Supported for the subcases with a
/// half-turn contraction formula (CC.2.2 and the RC.2.2.B / RR.2.2.B
/// analogues); throws SubcaseUnsupported elsewhere, RootBracketFailure when
/// the rescaling root cannot be bracketed.
LevelSetCLF levelset_clf(const Mat2& a, const Mat2& b, const Tolerances& tol = {});

/// Polynomial CLF from the gradients of the value-function norm W = sqrt(V)
/// at n_points level-set points, escalating p until the decrease check
/// passes on a 1440-sample grid.
PolyCLF poly_clf(const Mat2& a, const Mat2& b, int n_points, const Tolerances& tol = {});

/// Same data, piecewise-linear variant; decrease verified in the Clarke
/// sense on the active pieces.
PolytopeCLF polytope_clf(const Mat2& a, const Mat2& b, int n_points,
                         const Tolerances& tol = {});

}  // namespace swl2d
