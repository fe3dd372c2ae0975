#pragma once

#include <cstdint>
#include <vector>

#include "swl2d/classifier.hpp"
#include "swl2d/vec2.hpp"

namespace swl2d {

/// Piecewise-constant switching signal: values[i] holds on
/// [breakpoints[i], breakpoints[i+1]); breakpoints.size() == values.size()+1.
struct SwitchSignal {
    std::vector<double> breakpoints;
    std::vector<double> values;  // u in [0,1]

    bool covers(double t0, double t1) const {
        return !breakpoints.empty() && breakpoints.front() <= t0 && breakpoints.back() >= t1;
    }
    void validate() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Vec2> states;
    SwitchSignal signal;
};

/// Exact flow e^{Dt} x.
Vec2 flow(const Mat2& d, double t, Vec2 x);

/// Exact per-interval propagation of dx/dt = (uA + (1-u)B) x.
/// States are recorded at every breakpoint and at a sampling step.
Trajectory simulate(const Mat2& a, const Mat2& b, const SwitchSignal& sig, Vec2 x0,
                    double t_end, double sample_dt = 0.05);

/// Random piecewise-constant signal on [0, horizon]: exponentially
/// distributed dwell times; u drawn from {0,1} (bang-bang) or [0,1].
SwitchSignal random_signal(double horizon, uint64_t seed, bool bang_bang,
                           double mean_dwell = 0.2);

struct GuesStats {
    double decay_observed = 0.0;  // fraction of trials that contracted
    double max_growth = 0.0;      // largest ratio |x(T)|/|x(0)| observed
};

/// Seeded random-signal decay statistics. Advisory; the worst-trajectory
/// oracle is the decisive check.
GuesStats empirical_gues(const Mat2& a, const Mat2& b, int trials, double horizon,
                         uint64_t seed);

struct ConvexificationReport {
    bool scaling_ok = false;
    bool chattering_ok = false;
    bool ensembles_agree = false;
    double chattering_order = 0.0;  // empirical order of the sup-gap in tau
    std::vector<std::string> violations;

    bool all_ok() const { return scaling_ok && chattering_ok && ensembles_agree; }
};

/// Checks that the classification only depends on the convex semicone:
/// verdict invariance under positive scalings, chattering approximation of
/// interior controls, and agreement of {0,1} vs [0,1] signal ensembles.
ConvexificationReport convexification_suite(const Mat2& a, const Mat2& b, uint64_t seed,
                                            const Tolerances& tol = {});

}  // namespace swl2d
