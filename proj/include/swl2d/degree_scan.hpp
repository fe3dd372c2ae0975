#pragma once

#include <optional>
#include <vector>

#include "swl2d/core2d.hpp"

namespace swl2d {

/// Homogeneous bivariate polynomial V(x) = sum_j c[j] x1^(d-j) x2^j.
struct HomogPoly {
    int degree = 0;
    std::vector<double> coeffs;  // degree + 1 entries

    double evaluate(Vec2 x) const;
    Vec2 gradient(Vec2 x) const;
};

/// Sampled linear feasibility encoding of the CLF conditions for a fixed
/// even degree: V >= 1 and grad V . Dx <= -epsilon at unit-circle samples,
/// linear in the coefficients. Checking D in {A, B} covers every
/// intermediate matrix by linearity in u.
struct FeasibilityProblem {
    int degree;
    std::vector<Vec2> samples;
    double epsilon;

    std::vector<std::vector<double>> rows;  // constraints as M c >= b
    std::vector<double> rhs;
};

FeasibilityProblem build_feasibility(const Mat2& a, const Mat2& b, int degree,
                                     int n_samples, double epsilon);

struct DegreeOutcome {
    int degree = 0;
    bool feasible_at_samples = false;
    bool verified = false;  // re-checked on the 4x grid at margin epsilon/2
    std::vector<double> coeffs;
    int lp_iterations = 0;
};

struct ScanResult {
    std::vector<DegreeOutcome> outcomes;
    std::optional<int> d_min;  // smallest verified-feasible degree
};

/// One degree: LP feasibility plus fine-grid verification of a feasible
/// answer. Returns the verified coefficients, or nullopt when infeasible at
/// the sampling (which is evidence, not proof of nonexistence).
std::optional<HomogPoly> feasible_degree(const Mat2& a, const Mat2& b, int degree,
                                         int n_samples, const Tolerances& tol = {});

DegreeOutcome feasible_degree_outcome(const Mat2& a, const Mat2& b, int degree,
                                      int n_samples, const Tolerances& tol = {});

/// Escalate d = 2, 4, ... <= d_cap and report the first verified degree.
ScanResult min_degree(const Mat2& a, const Mat2& b, int d_cap, const Tolerances& tol = {});

struct Theorem2Row {
    int k = 0;
    double rho = 0.0;     // rho_a = rho_b of the normal-form pair
    double rho_cc = 0.0;  // half-turn contraction of the pair
    std::optional<int> d_min;
    double wall_time = 0.0;  // seconds spent on the degree scan
};

/// Minimal-degree growth along a sequence of pairs approaching the marginal
/// curve: rho_k = rho* (1 + 2^-k) on the diagonal rho_a = rho_b at fixed
/// kappa > 1, where rho* solves rho_cc(r, r, kappa) = 1.
std::vector<Theorem2Row> theorem2_experiment(double kappa, int n_steps, int d_cap,
                                             const Tolerances& tol = {});

/// The diagonal marginal radius rho* for a given kappa > 1.
double marginal_diagonal_rho(double kappa);

}  // namespace swl2d
