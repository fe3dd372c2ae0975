#include "swl2d/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace swl2d {

void SwitchSignal::validate() const {
    if (breakpoints.size() != values.size() + 1) {
        throw SwlError(ErrorCode::InvalidInput,
                       "signal: breakpoints must be one longer than values");
    }
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1])) {
            throw SwlError(ErrorCode::InvalidInput, "signal: breakpoints must increase");
        }
    }
    for (double u : values) {
        if (!(u >= 0.0 && u <= 1.0)) {
            throw SwlError(ErrorCode::InvalidInput, "signal: u outside [0,1]");
        }
    }
}

Vec2 flow(const Mat2& d, double t, Vec2 x) {
    if (!std::isfinite(t)) throw SwlError(ErrorCode::InvalidInput, "flow: non-finite time");
    return expm(d, t) * x;
}

Trajectory simulate(const Mat2& a, const Mat2& b, const SwitchSignal& sig, Vec2 x0,
                    double t_end, double sample_dt) {
    sig.validate();
    if (!sig.covers(0.0, t_end)) {
        throw SwlError(ErrorCode::SignalGap, "simulate: signal does not cover [0, t_end]");
    }
    Trajectory traj;
    traj.signal = sig;
    traj.times.push_back(0.0);
    traj.states.push_back(x0);

    Vec2 x = x0;
    double t = 0.0;
    for (size_t i = 0; i < sig.values.size() && t < t_end; ++i) {
        const double seg_end = std::min(sig.breakpoints[i + 1], t_end);
        if (seg_end <= t) continue;
        const double u = sig.values[i];
        const Mat2 m = a * u + b * (1.0 - u);
        // exact flow, recorded at the sampling grid within the interval
        double s = t;
        while (s < seg_end) {
            const double step = std::min(sample_dt, seg_end - s);
            x = expm(m, step) * x;
            s += step;
            traj.times.push_back(s);
            traj.states.push_back(x);
        }
        t = seg_end;
    }
    return traj;
}

SwitchSignal random_signal(double horizon, uint64_t seed, bool bang_bang, double mean_dwell) {
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> dwell(1.0 / mean_dwell);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    SwitchSignal sig;
    sig.breakpoints.push_back(0.0);
    double t = 0.0;
    while (t < horizon) {
        t += std::max(dwell(rng), 1e-9);
        sig.breakpoints.push_back(t);
        sig.values.push_back(bang_bang ? (uni(rng) < 0.5 ? 0.0 : 1.0) : uni(rng));
    }
    return sig;
}

GuesStats empirical_gues(const Mat2& a, const Mat2& b, int trials, double horizon,
                         uint64_t seed) {
    if (trials < 1) throw SwlError(ErrorCode::InvalidInput, "empirical_gues: trials >= 1");
    std::mt19937_64 master(seed);
    GuesStats st;
    int decayed = 0;
    for (int i = 0; i < trials; ++i) {
        const uint64_t s = master();
        std::mt19937_64 rng(s ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
        const Vec2 x0 = unit(ang(rng));
        const bool bang = i % 2 == 0;
        const SwitchSignal sig = random_signal(horizon, s, bang);
        const Trajectory tr = simulate(a, b, sig, x0, horizon, 0.5);
        const double ratio = tr.states.back().norm() / x0.norm();
        if (ratio < 1.0) ++decayed;
        st.max_growth = std::max(st.max_growth, ratio);
    }
    st.decay_observed = static_cast<double>(decayed) / trials;
    return st;
}

namespace {

/// Max state gap between the exact flow of M(u) and its period-tau
/// bang-bang chattering approximation over [0, horizon].
double chattering_gap(const Mat2& a, const Mat2& b, double u, double tau, double horizon,
                      Vec2 x0) {
    const Mat2 m = a * u + b * (1.0 - u);
    Vec2 x = x0;
    double gap = 0.0;
    double t = 0.0;
    while (t < horizon) {
        x = expm(b, (1.0 - u) * tau) * (expm(a, u * tau) * x);
        t += tau;
        const Vec2 exact = expm(m, t) * x0;
        gap = std::max(gap, (x - exact).norm());
    }
    return gap;
}

}  // namespace

ConvexificationReport convexification_suite(const Mat2& a, const Mat2& b, uint64_t seed,
                                            const Tolerances& tol) {
    ConvexificationReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> scale(0.1, 5.0);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    const Verdict base = classify(a, b, tol);
    rep.scaling_ok = true;
    for (int i = 0; i < 20; ++i) {
        const double al = scale(rng), be = scale(rng);
        const Verdict v = classify(a * al, b * be, tol);
        if (v.outcome != base.outcome || v.subcase != base.subcase) {
            rep.scaling_ok = false;
            std::ostringstream os;
            os << "verdict changed under scaling (" << al << ", " << be << ")";
            rep.violations.push_back(os.str());
        }
    }

    // sup-gap of the chattering approximation should shrink ~linearly in tau
    const double u = 0.25 + 0.5 * uni(rng);
    const Vec2 x0 = unit(uni(rng) * 2.0 * M_PI);
    const double taus[3] = {0.1, 0.05, 0.025};
    double gaps[3];
    for (int i = 0; i < 3; ++i) gaps[i] = chattering_gap(a, b, u, taus[i], 5.0, x0);
    const double o1 = std::log2(gaps[0] / gaps[1]);
    const double o2 = std::log2(gaps[1] / gaps[2]);
    rep.chattering_order = 0.5 * (o1 + o2);
    rep.chattering_ok = rep.chattering_order > 0.5 && gaps[2] < gaps[0];
    if (!rep.chattering_ok) {
        std::ostringstream os;
        os << "chattering order " << rep.chattering_order << " (gaps " << gaps[0] << ", "
           << gaps[1] << ", " << gaps[2] << ")";
        rep.violations.push_back(os.str());
    }

    const GuesStats bang = empirical_gues(a, b, 60, 20.0, seed ^ 0x5bf0a8b1ULL);
    GuesStats relaxed;
    {
        std::mt19937_64 master(seed ^ 0xc2b2ae35ULL);
        int decayed = 0;
        for (int i = 0; i < 60; ++i) {
            const uint64_t s = master();
            std::mt19937_64 r2(s);
            std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
            const Vec2 y0 = unit(ang(r2));
            const SwitchSignal sig = random_signal(20.0, s, /*bang_bang=*/false);
            const Trajectory tr = simulate(a, b, sig, y0, 20.0, 0.5);
            const double ratio = tr.states.back().norm();
            if (ratio < 1.0) ++decayed;
            relaxed.max_growth = std::max(relaxed.max_growth, ratio);
        }
        relaxed.decay_observed = decayed / 60.0;
    }
    rep.ensembles_agree = std::abs(bang.decay_observed - relaxed.decay_observed) <= 0.1;
    if (!rep.ensembles_agree) {
        std::ostringstream os;
        os << "decay fraction bang-bang " << bang.decay_observed << " vs relaxed "
           << relaxed.decay_observed;
        rep.violations.push_back(os.str());
    }
    return rep;
}

}  // namespace swl2d
