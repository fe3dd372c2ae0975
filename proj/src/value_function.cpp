#include "swl2d/value_function.hpp"

#include <cmath>

#include "swl2d/classifier.hpp"

namespace swl2d {

namespace {

/// integral of e^{cs} over [0,h]
double int_exp(double c, double h) {
    const double ch = c * h;
    if (std::abs(ch) < 1e-6) {
        return h * (1.0 + ch * (0.5 + ch * (1.0 / 6.0 + ch / 24.0)));
    }
    return (std::exp(ch) - 1.0) / c;
}

/// integral of s e^{cs} over [0,h]
double int_s_exp(double c, double h) {
    const double ch = c * h;
    if (std::abs(ch) < 1e-5) {
        return h * h * (0.5 + ch * (1.0 / 3.0 + ch * (1.0 / 8.0 + ch / 30.0)));
    }
    return (h * std::exp(ch) - int_exp(c, h)) / c;
}

/// integral of s^2 e^{cs} over [0,h]
double int_s2_exp(double c, double h) {
    const double ch = c * h;
    if (std::abs(ch) < 1e-4) {
        return h * h * h * (1.0 / 3.0 + ch * (0.25 + ch * (0.1 + ch / 36.0)));
    }
    return (h * h * std::exp(ch) - 2.0 * int_s_exp(c, h)) / c;
}

/// integral of e^{cs} cos(bs) over [0,h], b != 0
double int_exp_cos(double c, double b, double h) {
    const double den = c * c + b * b;
    return (std::exp(c * h) * (c * std::cos(b * h) + b * std::sin(b * h)) - c) / den;
}

/// integral of e^{cs} sin(bs) over [0,h], b != 0
double int_exp_sin(double c, double b, double h) {
    const double den = c * c + b * b;
    return (std::exp(c * h) * (c * std::sin(b * h) - b * std::cos(b * h)) + b) / den;
}

}  // namespace

double squared_norm_integral(const Mat2& d, Vec2 x, double h) {
    const double m = 0.5 * d.trace();
    const double det = d.det();
    const double disc = m * m - det;
    const double scale = std::max({std::abs(m), std::sqrt(std::abs(det)), 1e-300});
    const double thr = 1e-4 * scale;

    if (disc < -thr * thr) {
        // complex pair m +- i w
        const double w = std::sqrt(-disc);
        const Vec2 wx = ((d - Mat2::scalar(m)) * x) / w;
        const double c0 = 0.5 * (x.norm2() + wx.norm2());
        const double c1 = 0.5 * (x.norm2() - wx.norm2());
        const double c2 = x.dot(wx);
        return c0 * int_exp(2.0 * m, h) + c1 * int_exp_cos(2.0 * m, 2.0 * w, h) +
               c2 * int_exp_sin(2.0 * m, 2.0 * w, h);
    }
    if (disc > thr * thr) {
        // real distinct m +- w
        const double w = std::sqrt(disc);
        const double l1 = m + w, l2 = m - w;
        const Vec2 p = ((d - Mat2::scalar(l2)) * x) / (2.0 * w);
        const Vec2 q = x - p;
        return p.norm2() * int_exp(2.0 * l1, h) + 2.0 * p.dot(q) * int_exp(l1 + l2, h) +
               q.norm2() * int_exp(2.0 * l2, h);
    }
    // coincident (or numerically coincident) eigenvalues: e^{Ds}x = e^{ms}(x + sNx)
    const Vec2 nx = (d - Mat2::scalar(m)) * x;
    return x.norm2() * int_exp(2.0 * m, h) + 2.0 * x.dot(nx) * int_s_exp(2.0 * m, h) +
           nx.norm2() * int_s2_exp(2.0 * m, h);
}

AngularFunction solve_value(const Mat2& a, const Mat2& b, int n_theta, double h,
                            const Tolerances& tol) {
    if (n_theta < 8 || h <= 0.0) {
        throw SwlError(ErrorCode::InvalidInput, "solve_value: bad grid parameters");
    }
    const Verdict verdict = classify(a, b, tol);
    if (verdict.outcome != Outcome::Gues) {
        throw SwlError(ErrorCode::NotGues, "solve_value: the value function requires GUES");
    }

    struct Step {
        double g;     // running cost over one step
        double f;     // |e^{Dh} u|^2
        int base;     // grid cell of the landing angle
        double w[4];  // interpolation stencil weights
    };
    const Mat2* mats[2] = {&a, &b};
    std::vector<Step> steps[2];

    const int n = n_theta;
    const double dtheta = 2.0 * M_PI / n;
    for (int fi = 0; fi < 2; ++fi) {
        const Mat2 phi = expm(*mats[fi], h);
        steps[fi].resize(n);
        for (int i = 0; i < n; ++i) {
            const Vec2 u = unit(i * dtheta);
            const Vec2 y = phi * u;
            Step st;
            st.g = squared_norm_integral(*mats[fi], u, h);
            st.f = y.norm2();
            double pos = y.angle() / dtheta;
            double cell = std::floor(pos);
            const double s = pos - cell;
            st.base = static_cast<int>(((static_cast<long>(cell) % n) + n) % n);
            st.w[0] = 0.5 * (-s + 2.0 * s * s - s * s * s);
            st.w[1] = 1.0 + 0.5 * (-5.0 * s * s + 3.0 * s * s * s);
            st.w[2] = 0.5 * (s + 4.0 * s * s - 3.0 * s * s * s);
            st.w[3] = 0.5 * (-s * s + s * s * s);
            steps[fi][i] = st;
        }
    }

    std::vector<double> v(n, 0.0), vn(n, 0.0);
    const auto wrap = [n](int k) { return (k % n + n) % n; };
    double residual = 0.0;
    for (int iter = 0; iter < tol.vf_max_iters; ++iter) {
        residual = 0.0;
        for (int i = 0; i < n; ++i) {
            double best = 0.0;
            for (int fi = 0; fi < 2; ++fi) {
                const Step& st = steps[fi][i];
                const double interp = st.w[0] * v[wrap(st.base - 1)] + st.w[1] * v[st.base] +
                                      st.w[2] * v[wrap(st.base + 1)] +
                                      st.w[3] * v[wrap(st.base + 2)];
                const double cand = st.g + st.f * interp;
                if (fi == 0 || cand > best) best = cand;
            }
            vn[i] = best;
            residual = std::max(residual, std::abs(best - v[i]));
        }
        v.swap(vn);
        if (residual < tol.vf_tol) return AngularFunction(std::move(v));
    }
    throw SwlError(ErrorCode::NoConvergence,
                   "solve_value: residual " + std::to_string(residual) +
                       " after max iterations; the pair is close to marginal, refine h");
}

Vec2 level_point(const AngularFunction& v, double theta) {
    return unit(theta) / std::sqrt(v(theta));
}

Vec2 level_gradient(const AngularFunction& v, double theta) {
    const double val = v(theta);
    const double dv = v.derivative(theta);
    const double sq = std::sqrt(val);
    const Vec2 u = unit(theta);
    const Vec2 uperp{-u.y, u.x};
    return u * sq + uperp * (dv / (2.0 * sq));
}

bool level_set_strictly_convex(const AngularFunction& v, double curvature_tol) {
    const int n = v.size();
    for (int i = 0; i < n; ++i) {
        const double th = v.grid_angle(i);
        const double val = v(th);
        if (!(val > 0.0)) return false;
        const double dv = v.derivative(th);
        const double d2v = v.second_derivative(th);
        const double r = 1.0 / std::sqrt(val);
        const double rp = -0.5 * dv * std::pow(val, -1.5);
        const double rpp = 0.75 * dv * dv * std::pow(val, -2.5) - 0.5 * d2v * std::pow(val, -1.5);
        const double num = r * r + 2.0 * rp * rp - r * rpp;
        const double kappa = num / std::pow(r * r + rp * rp, 1.5);
        if (!(kappa >= curvature_tol)) return false;
    }
    return true;
}

}  // namespace swl2d
