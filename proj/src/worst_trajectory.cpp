#include "swl2d/worst_trajectory.hpp"

#include <cmath>
#include <limits>

namespace swl2d {

double CollinearityForm::scale() const {
    return std::max({std::abs(q[0]), std::abs(q[1]), std::abs(q[2])});
}

CollinearityForm collinearity_form(const Mat2& a, const Mat2& b, const Tolerances&) {
    CollinearityForm f;
    f.q[0] = a.a11 * b.a21 - a.a21 * b.a11;
    f.q[1] = a.a11 * b.a22 + a.a12 * b.a21 - a.a21 * b.a12 - a.a22 * b.a11;
    f.q[2] = a.a12 * b.a22 - a.a22 * b.a12;

    const double qs = f.scale();
    const double mat_scale = std::max(a.max_abs() * b.max_abs(), 1e-300);
    if (qs <= 1e-13 * mat_scale) {
        f.degenerate = true;
        return f;
    }

    const double disc = f.q[1] * f.q[1] - 4.0 * f.q[0] * f.q[2];
    const double disc_scale = std::max(f.q[1] * f.q[1], std::abs(4.0 * f.q[0] * f.q[2]));
    if (disc < -1e-14 * disc_scale) {
        f.n_lines = 0;
        return f;
    }

    // directions (c, s) with q0 c^2 + q1 cs + q2 s^2 = 0; solve for the better
    // conditioned of slope s/c or cotangent c/s
    auto push_angle = [&](double ang, int idx) {
        ang = std::fmod(ang, M_PI);
        if (ang < 0.0) ang += M_PI;
        f.angles[idx] = ang;
        const double t = std::tan(ang);
        f.slopes[idx] = (std::abs(std::cos(ang)) < 1e-154)
                            ? std::numeric_limits<double>::infinity()
                            : t;
    };

    if (disc <= 1e-14 * disc_scale) {
        f.n_lines = 1;
        if (std::abs(f.q[2]) >= std::abs(f.q[0])) {
            push_angle(std::atan2(-f.q[1] / 2.0, f.q[2]), 0);
        } else {
            push_angle(std::atan2(f.q[0], -f.q[1] / 2.0), 0);
        }
        return f;
    }

    f.n_lines = 2;
    const double sq = std::sqrt(disc);
    if (std::abs(f.q[2]) >= std::abs(f.q[0])) {
        // slopes m: q2 m^2 + q1 m + q0 = 0, stable split
        const double t = -0.5 * (f.q[1] + std::copysign(sq, f.q[1]));
        double m1, m2;
        if (std::abs(f.q[1]) < 1e-300 * sq) {
            m1 = sq / (2.0 * f.q[2]);
            m2 = -m1;
        } else {
            m1 = t / f.q[2];
            m2 = f.q[0] / t;
        }
        push_angle(std::atan(m1), 0);
        push_angle(std::atan(m2), 1);
    } else {
        // cotangents c: q0 c^2 + q1 c + q2 = 0
        const double t = -0.5 * (f.q[1] + std::copysign(sq, f.q[1]));
        double c1, c2;
        if (std::abs(f.q[1]) < 1e-300 * sq) {
            c1 = sq / (2.0 * f.q[0]);
            c2 = -c1;
        } else {
            c1 = t / f.q[0];
            c2 = f.q[2] / t;
        }
        push_angle(std::atan2(1.0, c1), 0);
        push_angle(std::atan2(1.0, c2), 1);
    }
    return f;
}

CollinearityForm collinearity(const Mat2& a, const Mat2& b, const Tolerances& tol) {
    CollinearityForm f = collinearity_form(a, b, tol);
    if (f.degenerate) {
        throw SwlError(ErrorCode::DegenerateQ,
                       "collinearity: Q vanishes identically, fields are proportional");
    }
    return f;
}

namespace {

/// Global rotation sign of a single field: nonzero only for complex
/// eigenvalues, where det(x, Dx) is sign-definite.
int field_rotation_sign(const Mat2& d) {
    const double mu = 0.5 * d.trace();
    if (mu * mu - d.det() < 0.0) {
        const double w = Vec2{1.0, 0.0}.cross(d * Vec2{1.0, 0.0});  // = d.a21
        return w > 0.0 ? 1 : -1;
    }
    return 0;
}

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

/// Rotation direction of the worst trajectory. 0 means no coherent rotation.
/// -2 encodes the opposite-rotation two-complex-field situation (single-field
/// trajectories, no switching).
int pick_sigma(const Mat2& a, const Mat2& b, const Tolerances& tol) {
    const int sa = field_rotation_sign(a);
    const int sb = field_rotation_sign(b);
    if (sa != 0 && sb != 0) return sa == sb ? sa : -2;
    if (sa != 0) return sa;
    if (sb != 0) return sb;
    // both real: the other field must carry the trajectory across each
    // field's eigendirections, coherently
    const Spectrum2 spa = spectrum(a, tol);
    const Spectrum2 spb = spectrum(b, tol);
    auto real_dir = [](const std::array<Complex, 2>& v) {
        return Vec2{v[0].real(), v[1].real()};
    };
    int s = 0;
    for (const auto& [dirs, other] :
         {std::pair{&spa, &b}, std::pair{&spb, &a}}) {
        for (const auto& v : {dirs->v1, dirs->v2}) {
            const Vec2 u = real_dir(v);
            const int si = sign_of(u.cross((*other) * u));
            if (si == 0) return 0;
            if (s == 0) s = si;
            if (si != s) return 0;
        }
    }
    return s;
}

struct Stepper {
    const Mat2* mats[2];
    CollinearityForm q;
    int sigma = 1;
    double dt_cap[2];

    const Mat2& mat(ActiveField f) const { return *mats[f == ActiveField::A ? 0 : 1]; }

    ActiveField winner_at(Vec2 u) const {
        return sigma * q.eval(u) > 0.0 ? ActiveField::A : ActiveField::B;
    }

    /// Winner for the sector ahead of x in the rotation direction.
    ActiveField winner_ahead(Vec2 x) const {
        const double qv = q.eval(x);
        if (std::abs(qv) > 1e-9 * q.scale() * x.norm2()) return winner_at(x);
        return winner_at(unit(x.angle() + sigma * 1e-7));
    }
};

}  // namespace

WorstTrajectory integrate_worst(const Mat2& a, const Mat2& b, Vec2 x0, StopRule stop,
                                const Tolerances& tol) {
    if (x0.norm2() == 0.0) throw SwlError(ErrorCode::InvalidInput, "integrate_worst: x0 = 0");

    WorstTrajectory traj;
    traj.start = x0;

    Stepper st;
    st.mats[0] = &a;
    st.mats[1] = &b;
    st.q = collinearity_form(a, b, tol);
    st.dt_cap[0] = 0.2 / std::max(a.max_abs(), 1e-300);
    st.dt_cap[1] = 0.2 / std::max(b.max_abs(), 1e-300);

    bool single_field = false;
    ActiveField forced = ActiveField::A;
    if (st.q.degenerate) {
        // proportional fields trace identical curves; follow A
        single_field = true;
    } else {
        int sigma = pick_sigma(a, b, tol);
        if (sigma == -2) {
            // complex fields with opposite rotations: the worst trajectory is
            // a single-field spiral; take the worse of the two
            if (st.q.n_lines != 0 && stop.kind != StopRule::Kind::FixedTime) {
                traj.stalled = true;
                traj.end = x0;
                return traj;
            }
            WorstTrajectory ta, tb;
            for (auto [f, out] : {std::pair{ActiveField::A, &ta}, std::pair{ActiveField::B, &tb}}) {
                Tolerances t2 = tol;
                // integrate each pure field by zeroing out the other via the
                // degenerate path
                const Mat2& d = f == ActiveField::A ? a : b;
                *out = integrate_worst(d, d * 2.0, x0, stop, t2);
            }
            const double ra = ta.end.norm(), rb = tb.end.norm();
            return ra >= rb ? ta : tb;
        }
        if (sigma == 0) {
            if (stop.kind != StopRule::Kind::FixedTime) {
                traj.stalled = true;
                traj.end = x0;
                return traj;
            }
            // no coherent rotation; fall back to the locally faster field sign
            const double wa = x0.cross(a * x0), wb = x0.cross(b * x0);
            sigma = std::abs(wa) >= std::abs(wb) ? (wa >= 0 ? 1 : -1) : (wb >= 0 ? 1 : -1);
        }
        st.sigma = sigma;
        traj.rotation_sign = sigma;
    }

    Vec2 x = x0;
    double t = 0.0;
    double cum = 0.0;
    ActiveField fld = single_field ? forced : st.winner_ahead(x0);
    double q_sign = 0.0;
    if (!single_field) {
        const double qv = st.q.eval(x);
        q_sign = (std::abs(qv) > 1e-9 * st.q.scale() * x.norm2())
                     ? sign_of(qv)
                     : sign_of(st.q.eval(unit(x.angle() + st.sigma * 1e-7)));
    }

    traj.samples.push_back({0.0, x, fld});
    Vec2 arc_start = x;
    double arc_t0 = 0.0;

    auto close_arc = [&](double t_now) {
        traj.arcs.push_back({fld, t_now - arc_t0, arc_start});
    };

    const int guard_max = 4000000;
    for (int it = 0; it < guard_max; ++it) {
        const Mat2& d = st.mat(fld);
        const double w = x.cross(d * x) / x.norm2();
        const int fi = fld == ActiveField::A ? 0 : 1;
        double dt = st.dt_cap[fi];
        if (std::abs(w) > 1e-300) dt = std::min(dt, tol.angle_step / std::abs(w));
        if (stop.kind == StopRule::Kind::FixedTime) dt = std::min(dt, stop.time - t);

        Vec2 xn = expm(d, dt) * x;
        bool hit = false;
        if (!single_field && q_sign * st.q.eval(xn) < 0.0) {
            double lo = 0.0, hi = dt;
            for (int i = 0; i < 128 && (hi - lo) > 1e-16 * std::max(dt, 1e-30); ++i) {
                const double mid = 0.5 * (lo + hi);
                if (q_sign * st.q.eval(expm(d, mid) * x) < 0.0) hi = mid;
                else lo = mid;
            }
            dt = hi;
            xn = expm(d, dt) * x;
            hit = true;
        }

        double dang = std::atan2(x.cross(xn), x.dot(xn));

        // record the half-turn radius when crossing pi, without disturbing the step
        if (!traj.half_turn_factor && std::abs(cum + dang) >= M_PI) {
            double lo = 0.0, hi = dt;
            for (int i = 0; i < 128 && (hi - lo) > 1e-16 * std::max(dt, 1e-30); ++i) {
                const double mid = 0.5 * (lo + hi);
                const Vec2 xm = expm(d, mid) * x;
                if (std::abs(cum + std::atan2(x.cross(xm), x.dot(xm))) >= M_PI) hi = mid;
                else lo = mid;
            }
            const Vec2 xh = expm(d, 0.5 * (lo + hi)) * x;
            traj.half_turn_factor = xh.norm() / traj.start.norm();
            if (stop.kind == StopRule::Kind::HalfTurn) {
                t += 0.5 * (lo + hi);
                cum = std::copysign(M_PI, cum + dang);
                x = xh;
                break;
            }
        }
        if (stop.kind == StopRule::Kind::FullTurn && std::abs(cum + dang) >= 2.0 * M_PI) {
            double lo = 0.0, hi = dt;
            for (int i = 0; i < 128 && (hi - lo) > 1e-16 * std::max(dt, 1e-30); ++i) {
                const double mid = 0.5 * (lo + hi);
                const Vec2 xm = expm(d, mid) * x;
                if (std::abs(cum + std::atan2(x.cross(xm), x.dot(xm))) >= 2.0 * M_PI) hi = mid;
                else lo = mid;
            }
            t += 0.5 * (lo + hi);
            x = expm(d, 0.5 * (lo + hi)) * x;
            cum = std::copysign(2.0 * M_PI, cum + dang);
            break;
        }

        cum += dang;
        t += dt;
        x = xn;
        traj.samples.push_back({t, x, fld});

        if (stop.kind == StopRule::Kind::FixedTime && t >= stop.time * (1.0 - 1e-15)) break;
        if (stop.kind != StopRule::Kind::FixedTime && t > tol.stall_time) {
            traj.stalled = true;
            break;
        }

        if (hit) {
            const ActiveField nf = st.winner_ahead(x);
            q_sign = -q_sign;
            if (nf != fld) {
                close_arc(t);
                fld = nf;
                arc_start = x;
                arc_t0 = t;
            }
        }
    }

    close_arc(t);
    traj.end = x;
    traj.total_time = t;
    traj.total_angle = cum;
    if (traj.samples.empty() || traj.samples.back().t < t) {
        traj.samples.push_back({t, x, fld});
    }
    if (stop.kind == StopRule::Kind::FullTurn && !traj.stalled) {
        traj.period = t;
        traj.closed = std::abs(x.norm() / traj.start.norm() - 1.0) <= tol.closed_tol;
    }
    return traj;
}

double contraction(const WorstTrajectory& traj) {
    if (traj.stalled) {
        throw SwlError(ErrorCode::NoRotation,
                       "contraction: trajectory stalled before completing its stop rule");
    }
    return traj.end.norm() / traj.start.norm();
}

}  // namespace swl2d
