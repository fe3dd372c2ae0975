#include "swl2d/clf_synthesis.hpp"

#include <cmath>
#include <functional>

#include "swl2d/classifier.hpp"
#include "swl2d/normal_form.hpp"
#include "swl2d/value_function.hpp"
#include "swl2d/worst_trajectory.hpp"

namespace swl2d {

double PolyCLF::evaluate(Vec2 x) const {
    double tmax = 0.0;
    for (const Vec2& w : forms) tmax = std::max(tmax, std::abs(w.dot(x)));
    if (tmax == 0.0) return 0.0;
    double s = 0.0;
    for (const Vec2& w : forms) s += std::pow(w.dot(x) / tmax, power);
    return s * std::pow(tmax, power);  // may overflow to inf for huge p off the unit scale
}

double PolyCLF::scaled_derivative(Vec2 x, Vec2 y) const {
    double tmax = 0.0;
    for (const Vec2& w : forms) tmax = std::max(tmax, std::abs(w.dot(x)));
    if (tmax == 0.0) return 0.0;
    double s = 0.0;
    for (const Vec2& w : forms) {
        s += std::pow(w.dot(x) / tmax, power - 1) * w.dot(y);
    }
    return s;  // true derivative = 2p * tmax^(2p-1) * s
}

double PolyCLF::evaluate_by_coefficients(Vec2 x) const {
    double v = 0.0;
    for (int j = 0; j <= power && j < static_cast<int>(coefficients.size()); ++j) {
        v += coefficients[j] * std::pow(x.x, power - j) * std::pow(x.y, j);
    }
    return v;
}

double PolytopeCLF::evaluate(Vec2 x) const {
    double m = 0.0;
    for (const Vec2& w : forms) m = std::max(m, std::abs(w.dot(x)));
    return m;
}

namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<double> expand_coefficients(const std::vector<Vec2>& forms, int power) {
    std::vector<double> c(power + 1, 0.0);
    for (const Vec2& w : forms) {
        for (int j = 0; j <= power; ++j) {
            c[j] += binomial(power, j) * std::pow(w.x, power - j) * std::pow(w.y, j);
        }
    }
    return c;
}

/// zeta-rescaled normal-form templates and the matching contraction formula,
/// per supported subcase.
struct Rescaler {
    std::function<double(double)> rho_of_zeta;
    std::function<Mat2(double)> a_of_zeta, b_of_zeta;
    double zeta_min;
};

Rescaler make_rescaler(const NormalForm& nf, Subcase sub) {
    Rescaler r;
    switch (sub) {
        case Subcase::CC22: {
            const double e = nf.e, ra = nf.rho_a, rb = nf.rho_b, kk = nf.kappa;
            r.rho_of_zeta = [=](double z) { return rho_cc(z * ra, z * rb, kk); };
            r.a_of_zeta = [=](double z) { return cc_template_a(z * ra, e); };
            r.b_of_zeta = [=](double z) { return cc_template_b(z * rb); };
            r.zeta_min = 1e-9;
            break;
        }
        case Subcase::RC22B: {
            const double a = nf.rho_a, rb = nf.rho_b, k = nf.kappa;
            r.rho_of_zeta = [=](double z) { return rho_rc_data(z * a, z * rb, k).rho; };
            r.a_of_zeta = [=](double z) { return rc_template_a(z * a); };
            r.b_of_zeta = [=](double z) { return rc_template_b(z * rb, k); };
            r.zeta_min = (1.0 + 1e-9) / a;  // the rescaled real matrix must stay Hurwitz
            break;
        }
        case Subcase::RR22B: {
            const double a = nf.rho_a, bb = nf.rho_b, kk = nf.kappa;
            r.rho_of_zeta = [=](double z) { return rho_rr(z * a, z * bb, kk); };
            r.a_of_zeta = [=](double z) { return rr_template_a(z * a); };
            r.b_of_zeta = [=](double z) { return rr_template_b(z * bb, kk); };
            r.zeta_min = (1.0 + 1e-9) / std::min(a, bb);
            break;
        }
        default:
            throw SwlError(ErrorCode::SubcaseUnsupported,
                           "levelset_clf: no rescaling construction for this subcase");
    }
    return r;
}

}  // namespace

LevelSetCLF levelset_clf(const Mat2& a, const Mat2& b, const Tolerances& tol) {
    const Verdict v = classify(a, b, tol);
    if (v.outcome != Outcome::Gues) {
        throw SwlError(ErrorCode::NotGues, "levelset_clf: pair is not GUES");
    }
    const NormalForm nf = to_normal_form(a, b, tol);
    const Rescaler rs = make_rescaler(nf, v.subcase);

    // bracket the marginal rescaling: contraction 1 between zeta_min and 1
    double lo = rs.zeta_min, hi = 1.0;
    double flo;
    {
        // step inward until the formula is defined and above 1
        double z = lo;
        bool found = false;
        for (int i = 0; i < 64; ++i) {
            try {
                flo = rs.rho_of_zeta(z);
                found = true;
                break;
            } catch (const SwlError&) {
                z = z + (hi - z) * 0.05;
            }
        }
        if (!found || !(flo > 1.0) || !(rs.rho_of_zeta(hi) < 1.0)) {
            throw SwlError(ErrorCode::RootBracketFailure,
                           "levelset_clf: could not bracket the marginal rescaling");
        }
        lo = z;
    }
    for (int i = 0; i < 200 && (hi - lo) > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        (rs.rho_of_zeta(mid) > 1.0 ? lo : hi) = mid;
    }
    const double zeta = 0.5 * (lo + hi);

    LevelSetCLF clf;
    clf.zeta = zeta;
    // map the rescaled normal forms back to the input coordinates; the swap
    // only matters for which alpha scales which template
    const Mat2 t = nf.t, tinv = nf.t.inverse();
    const Mat2 a_nf_tilde = rs.a_of_zeta(zeta);
    const Mat2 b_nf_tilde = rs.b_of_zeta(zeta);
    Mat2 first = t * a_nf_tilde * tinv * nf.alpha_a;
    Mat2 second = t * b_nf_tilde * tinv * nf.alpha_b;
    if (nf.swapped) std::swap(first, second);
    clf.a_tilde = first;
    clf.b_tilde = second;

    // the closed worst trajectory of the rescaled pair carries the level set
    Tolerances fine = tol;
    fine.angle_step = tol.angle_step / 4.0;
    const WorstTrajectory traj = integrate_worst(clf.a_tilde, clf.b_tilde, t * Vec2{1.0, 0.0},
                                                 StopRule::full_turn(), fine);
    if (traj.stalled || !traj.closed) {
        throw SwlError(ErrorCode::RootBracketFailure,
                       "levelset_clf: rescaled worst trajectory failed to close");
    }

    // resample the curve onto a uniform angle grid (log-linear between the
    // integration samples); the residual radius gap is spread
    // multiplicatively over the turn
    const auto& smp = traj.samples;
    std::vector<double> cum_angle(smp.size(), 0.0);
    for (size_t i = 1; i < smp.size(); ++i) {
        cum_angle[i] = cum_angle[i - 1] +
                       std::atan2(smp[i - 1].x.cross(smp[i].x), smp[i - 1].x.dot(smp[i].x));
    }
    const double sigma = traj.rotation_sign >= 0 ? 1.0 : -1.0;
    const double theta0 = traj.start.angle();
    const double gap = traj.end.norm() / traj.start.norm();

    const int n = 720;
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) {
        const double theta = 2.0 * M_PI * i / n;
        double off = sigma * (theta - theta0);
        off = off - 2.0 * M_PI * std::floor(off / (2.0 * M_PI));  // in [0, 2pi)
        const double target = sigma * off;
        // cum_angle is monotone in sigma-direction: binary search the segment
        size_t lo = 0, hi = smp.size() - 1;
        while (hi - lo > 1) {
            const size_t mid = (lo + hi) / 2;
            (sigma * cum_angle[mid] <= sigma * target ? lo : hi) = mid;
        }
        const double a0 = cum_angle[lo], a1 = cum_angle[hi];
        const double w = (a1 == a0) ? 0.0 : (target - a0) / (a1 - a0);
        const double r0 = smp[lo].x.norm(), r1 = smp[hi].x.norm();
        const double rad = r0 * std::pow(r1 / r0, w);
        r[i] = rad * std::pow(gap, -off / (2.0 * M_PI));
    }
    clf.r_tilde = AngularFunction(std::move(r));
    return clf;
}

namespace {

std::vector<Vec2> clf_forms(const Mat2& a, const Mat2& b, int n_points, const Tolerances& tol) {
    const Verdict v = classify(a, b, tol);
    if (v.outcome != Outcome::Gues) {
        throw SwlError(ErrorCode::NotGues, "polynomial CLF synthesis requires GUES");
    }
    const AngularFunction vf = solve_value(a, b, tol);
    if (!level_set_strictly_convex(vf, tol.curvature_tol)) {
        throw SwlError(ErrorCode::ConvexityFailure,
                       "value-function level set failed the strict convexity check");
    }
    std::vector<Vec2> forms;
    forms.reserve(n_points);
    for (int k = 0; k < n_points; ++k) {
        forms.push_back(level_gradient(vf, 2.0 * M_PI * k / n_points));
    }
    return forms;
}

}  // namespace

PolyCLF poly_clf(const Mat2& a, const Mat2& b, int n_points, const Tolerances& tol) {
    if (n_points < 8) {
        throw SwlError(ErrorCode::InvalidInput, "poly_clf: need at least 8 cover points");
    }
    PolyCLF clf;
    clf.forms = clf_forms(a, b, n_points, tol);

    const int n_check = 1440;
    for (int p2 = 2; p2 <= tol.poly_p_cap; p2 *= 2) {
        clf.power = p2;
        bool ok = true;
        for (int s = 0; s < n_check && ok; ++s) {
            const Vec2 x = unit(2.0 * M_PI * s / n_check);
            const double da = clf.scaled_derivative(x, a * x);
            const double db = clf.scaled_derivative(x, b * x);
            const double margin = tol.clf_margin_rel * std::max(std::abs(da), std::abs(db));
            ok = da < -margin && db < -margin;
        }
        if (ok) {
            if (p2 <= 64) clf.coefficients = expand_coefficients(clf.forms, p2);
            return clf;
        }
    }
    throw SwlError(ErrorCode::EscalationExceeded,
                   "poly_clf: power escalation exceeded the cap; pair is close to marginal");
}

PolytopeCLF polytope_clf(const Mat2& a, const Mat2& b, int n_points, const Tolerances& tol) {
    if (n_points < 4) {
        throw SwlError(ErrorCode::InvalidInput, "polytope_clf: need at least 4 forms");
    }
    PolytopeCLF clf;
    clf.forms = clf_forms(a, b, n_points, tol);

    const int n_check = 1440;
    for (int s = 0; s < n_check; ++s) {
        const Vec2 x = unit(2.0 * M_PI * s / n_check);
        double fmax = 0.0;
        for (const Vec2& w : clf.forms) fmax = std::max(fmax, std::abs(w.dot(x)));
        for (const Vec2& w : clf.forms) {
            const double t = w.dot(x);
            if (std::abs(t) < fmax * (1.0 - tol.tie_tol)) continue;
            // active piece |w.x|: Clarke decrease along both fields
            const double sgn = t >= 0.0 ? 1.0 : -1.0;
            if (!(sgn * w.dot(a * x) < 0.0) || !(sgn * w.dot(b * x) < 0.0)) {
                throw SwlError(ErrorCode::ConvexityFailure,
                               "polytope_clf: Clarke decrease failed at a sample");
            }
        }
    }
    return clf;
}

}  // namespace swl2d
