#pragma once

#include "swl2d/angular.hpp"
#include "swl2d/core2d.hpp"

namespace swl2d {

/// Closed-form integral of |e^{Ds} x|^2 over [0, h], from the eigenvalue
/// structure of D (no quadrature).
double squared_norm_integral(const Mat2& d, Vec2 x, double h);

/// Angular profile v of the worst-case quadratic cost: the cost of starting
/// at r*(cos t, sin t) is r^2 v(t). Solved by value iteration with exact
/// per-step arcs; the sup over signals is realized as a max over the two
/// extreme matrices per step of length h.
/// Requires classify(a, b) == GUES; throws NotGues / NoConvergence.
AngularFunction solve_value(const Mat2& a, const Mat2& b, int n_theta, double h,
                            const Tolerances& tol = {});

inline AngularFunction solve_value(const Mat2& a, const Mat2& b, const Tolerances& tol = {}) {
    return solve_value(a, b, tol.vf_n_theta, tol.vf_h, tol);
}

/// Level-1 point of W(x) = sqrt(r^2 v(theta)) at the given angle.
Vec2 level_point(const AngularFunction& v, double theta);

/// Gradient of W at the level-1 point; satisfies grad.y == 1 (degree-1
/// homogeneity).
Vec2 level_gradient(const AngularFunction& v, double theta);

/// Strict convexity of the level set {W = 1}: positive normalized curvature
/// at every grid point, with the given threshold.
bool level_set_strictly_convex(const AngularFunction& v, double curvature_tol);

}  // namespace swl2d
