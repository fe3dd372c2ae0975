#include "swl2d/degree_scan.hpp"

#include <chrono>
#include <cmath>

#include "swl2d/classifier.hpp"
#include "swl2d/normal_form.hpp"
#include "swl2d/simplex.hpp"

namespace swl2d {

double HomogPoly::evaluate(Vec2 x) const {
    // Horner in x2/x1 would lose the homogeneous structure; direct powers are
    // fine at these degrees.
    double val = 0.0;
    for (int j = 0; j <= degree; ++j) {
        val += coeffs[j] * std::pow(x.x, degree - j) * std::pow(x.y, j);
    }
    return val;
}

Vec2 HomogPoly::gradient(Vec2 x) const {
    Vec2 g{0.0, 0.0};
    for (int j = 0; j <= degree; ++j) {
        const double c = coeffs[j];
        if (degree - j > 0) {
            g.x += c * (degree - j) * std::pow(x.x, degree - j - 1) * std::pow(x.y, j);
        }
        if (j > 0) {
            g.y += c * j * std::pow(x.x, degree - j) * std::pow(x.y, j - 1);
        }
    }
    return g;
}

FeasibilityProblem build_feasibility(const Mat2& a, const Mat2& b, int degree,
                                     int n_samples, double epsilon) {
    if (degree < 2 || degree % 2 != 0) {
        throw SwlError(ErrorCode::InvalidInput, "feasibility: degree must be even and >= 2");
    }
    FeasibilityProblem fp;
    fp.degree = degree;
    fp.epsilon = epsilon;

    // Even homogeneous V makes antipodal samples identical constraints, so
    // n_samples points on the circle collapse to n_samples/2 distinct rows.
    const int distinct = std::max(4, n_samples / 2);
    const int nv = degree + 1;
    for (int s = 0; s < distinct; ++s) {
        const Vec2 x = unit(M_PI * s / distinct);
        fp.samples.push_back(x);

        std::vector<double> vrow(nv), arow(nv), brow(nv);
        const Vec2 ax = a * x, bx = b * x;
        for (int j = 0; j <= degree; ++j) {
            const double m1 = (degree - j > 0) ? (degree - j) * std::pow(x.x, degree - j - 1) *
                                                     std::pow(x.y, j)
                                               : 0.0;
            const double m2 = (j > 0) ? j * std::pow(x.x, degree - j) * std::pow(x.y, j - 1)
                                      : 0.0;
            vrow[j] = std::pow(x.x, degree - j) * std::pow(x.y, j);
            arow[j] = -(m1 * ax.x + m2 * ax.y);  // -grad V . Ax >= eps
            brow[j] = -(m1 * bx.x + m2 * bx.y);
        }
        fp.rows.push_back(std::move(vrow));
        fp.rhs.push_back(1.0);
        fp.rows.push_back(std::move(arow));
        fp.rhs.push_back(epsilon);
        fp.rows.push_back(std::move(brow));
        fp.rhs.push_back(epsilon);
    }
    return fp;
}

namespace {

bool verify_candidate(const Mat2& a, const Mat2& b, const HomogPoly& p, int n_samples,
                      double epsilon) {
    // 4x the sample density, margin epsilon/2
    const int fine = std::max(8, 4 * (n_samples / 2));
    for (int s = 0; s < fine; ++s) {
        const Vec2 x = unit(M_PI * s / fine);
        if (!(p.evaluate(x) > 0.0)) return false;
        const Vec2 g = p.gradient(x);
        if (!(g.dot(a * x) <= -0.5 * epsilon)) return false;
        if (!(g.dot(b * x) <= -0.5 * epsilon)) return false;
    }
    return true;
}

}  // namespace

DegreeOutcome feasible_degree_outcome(const Mat2& a, const Mat2& b, int degree,
                                      int n_samples, const Tolerances& tol) {
    DegreeOutcome out;
    out.degree = degree;

    int samples = n_samples;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const FeasibilityProblem fp = build_feasibility(a, b, degree, samples, tol.lp_epsilon);
        const int cap = tol.lp_iter_cap_factor * static_cast<int>(fp.rows.size());
        const LpResult lp = lp_feasible_geq(fp.rows, fp.rhs, cap);
        out.lp_iterations += lp.iterations;
        if (lp.status != LpStatus::Feasible) {
            out.feasible_at_samples = false;
            return out;
        }
        out.feasible_at_samples = true;
        out.coeffs = lp.x;
        HomogPoly p{degree, lp.x};
        if (verify_candidate(a, b, p, samples, tol.lp_epsilon)) {
            out.verified = true;
            return out;
        }
        samples *= 2;  // knife-edge solution: one retry at doubled sampling
    }
    return out;
}

std::optional<HomogPoly> feasible_degree(const Mat2& a, const Mat2& b, int degree,
                                         int n_samples, const Tolerances& tol) {
    const DegreeOutcome out = feasible_degree_outcome(a, b, degree, n_samples, tol);
    if (out.verified) return HomogPoly{degree, out.coeffs};
    return std::nullopt;
}

ScanResult min_degree(const Mat2& a, const Mat2& b, int d_cap, const Tolerances& tol) {
    ScanResult res;
    for (int d = 2; d <= d_cap; d += 2) {
        DegreeOutcome out = feasible_degree_outcome(a, b, d, tol.lp_n_samples, tol);
        const bool done = out.verified;
        res.outcomes.push_back(std::move(out));
        if (done) {
            res.d_min = d;
            break;
        }
    }
    return res;
}

double marginal_diagonal_rho(double kappa) {
    if (!(kappa > 1.0)) {
        throw SwlError(ErrorCode::DomainError, "marginal_diagonal_rho: kappa must exceed 1");
    }
    // On the diagonal D = (K^2-1) + 2 r^2 (K-1) > 0, so rho_cc is defined on
    // the whole bracket (0, sqrt(K^2-1)); it decreases from above 1.
    double lo = 1e-9, hi = std::sqrt(kappa * kappa - 1.0);
    if (!(rho_cc(lo, lo, kappa) > 1.0) || !(rho_cc(hi, hi, kappa) < 1.0)) {
        throw SwlError(ErrorCode::BracketFailure, "marginal_diagonal_rho: bracket failed");
    }
    for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (rho_cc(mid, mid, kappa) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<Theorem2Row> theorem2_experiment(double kappa, int n_steps, int d_cap,
                                             const Tolerances& tol) {
    const double rstar = marginal_diagonal_rho(kappa);
    if (!(dd_of(CaseTag::CC, rstar, rstar, kappa) > 0.0)) {
        throw SwlError(ErrorCode::DomainError, "theorem2: D <= 0 at the marginal point");
    }
    const double e = kappa + std::sqrt(kappa * kappa - 1.0);

    // the GUES side of the curve: rho_cc decreases in rho, so offset upward
    Tolerances t2 = tol;
    t2.lp_n_samples = 360;  // trig degree <= d_cap + 2 is resolved well below this

    std::vector<Theorem2Row> table;
    for (int k = 1; k <= n_steps; ++k) {
        Theorem2Row row;
        row.k = k;
        row.rho = rstar * (1.0 + std::pow(2.0, -k));
        row.rho_cc = rho_cc(row.rho, row.rho, kappa);

        const Mat2 a = cc_template_a(row.rho, e);
        const Mat2 b = cc_template_b(row.rho);
        const Verdict v = classify(a, b, tol);
        if (v.outcome != Outcome::Gues) {
            throw SwlError(ErrorCode::DomainError,
                           "theorem2: sequence pair is not GUES; offset sign wrong");
        }
        const auto start = std::chrono::steady_clock::now();
        const ScanResult scan = min_degree(a, b, d_cap, t2);
        row.d_min = scan.d_min;
        row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        table.push_back(row);
    }
    return table;
}

}  // namespace swl2d
