#pragma once

// Independent oracles used by the tests: these deliberately avoid the code
// paths they check.

#include <cmath>

#include "swl2d/vec2.hpp"

namespace swl2d::testoracle {

/// 30-term scaling-and-squaring Taylor series for e^{Mt}.
inline Mat2 expm_taylor(const Mat2& m, double t) {
    Mat2 a = m * t;
    int squarings = 0;
    while (a.max_abs() > 0.5 && squarings < 40) {
        a = a * 0.5;
        ++squarings;
    }
    Mat2 sum = Mat2::identity();
    Mat2 term = Mat2::identity();
    for (int k = 1; k <= 30; ++k) {
        term = term * a / static_cast<double>(k);
        sum = sum + term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

/// Solve A^T P + P A = -Q for symmetric P (3x3 linear system via Cramer).
/// P gives the quadratic cost x^T P x = integral of the Q-weighted norm.
inline Mat2 lyapunov_solve(const Mat2& a, const Mat2& q) {
    // unknowns (p11, p12, p22)
    const double m[3][3] = {
        {2.0 * a.a11, 2.0 * a.a21, 0.0},
        {a.a12, a.a11 + a.a22, a.a21},
        {0.0, 2.0 * a.a12, 2.0 * a.a22},
    };
    const double rhs[3] = {-q.a11, -0.5 * (q.a12 + q.a21), -q.a22};
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    auto solve_col = [&](int col) {
        double mm[3][3];
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) mm[i][j] = (j == col) ? rhs[i] : m[i][j];
        }
        const double d = mm[0][0] * (mm[1][1] * mm[2][2] - mm[1][2] * mm[2][1]) -
                         mm[0][1] * (mm[1][0] * mm[2][2] - mm[1][2] * mm[2][0]) +
                         mm[0][2] * (mm[1][0] * mm[2][1] - mm[1][1] * mm[2][0]);
        return d / det;
    };
    const double p11 = solve_col(0), p12 = solve_col(1), p22 = solve_col(2);
    return {p11, p12, p12, p22};
}

/// Composite-Simpson quadrature of |e^{Ds}x|^2 over [0,h].
inline double squared_norm_quadrature(const Mat2& d, Vec2 x, double h, int panels = 256) {
    auto f = [&](double s) { return (expm_taylor(d, s) * x).norm2(); };
    double sum = f(0.0) + f(h);
    for (int i = 1; i < panels; ++i) {
        sum += f(h * i / panels) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / (3.0 * panels);
}

}  // namespace swl2d::testoracle
