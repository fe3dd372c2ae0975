#include "swl2d/simplex.hpp"

#include <cmath>

namespace swl2d {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-9;

}  // namespace

LpResult lp_feasible_geq(const std::vector<std::vector<double>>& m_in,
                         const std::vector<double>& b_in, int iter_cap) {
    const int m = static_cast<int>(m_in.size());
    if (m == 0) return {LpStatus::Feasible, {}, 0};
    const int nv = static_cast<int>(m_in[0].size());

    // columns: [x+ (nv) | x- (nv) | surplus (m) | artificial (m)] and rhs
    const int n_struct = 2 * nv + m;
    const int ncols = n_struct + m;
    std::vector<double> t(static_cast<size_t>(m) * (ncols + 1), 0.0);
    const auto at = [&](int i, int j) -> double& {
        return t[static_cast<size_t>(i) * (ncols + 1) + j];
    };

    for (int i = 0; i < m; ++i) {
        const double sign = b_in[i] >= 0.0 ? 1.0 : -1.0;  // keep rhs nonnegative
        for (int j = 0; j < nv; ++j) {
            at(i, j) = sign * m_in[i][j];
            at(i, nv + j) = -sign * m_in[i][j];
        }
        at(i, 2 * nv + i) = -sign;  // surplus of a >= row
        at(i, n_struct + i) = 1.0;  // artificial
        at(i, ncols) = sign * b_in[i];
    }

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n_struct + i;

    // phase-1 objective row (z_j - c_j form): minimize the artificial sum
    std::vector<double> obj(ncols + 1, 0.0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= ncols; ++j) obj[j] += at(i, j);
    }
    for (int i = 0; i < m; ++i) obj[n_struct + i] -= 1.0;

    int iters = 0;
    while (true) {
        if (++iters > iter_cap) {
            throw SwlError(ErrorCode::SolverCycle,
                           "simplex: iteration cap exceeded (" + std::to_string(iter_cap) + ")");
        }
        // Dantzig pricing over structural columns only
        int enter = -1;
        double best = kPivotTol;
        for (int j = 0; j < n_struct; ++j) {
            if (obj[j] > best) {
                best = obj[j];
                enter = j;
            }
        }
        if (enter < 0) break;  // optimal

        // lexicographic ratio test
        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < m; ++i) {
            const double piv = at(i, enter);
            if (piv <= kPivotTol) continue;
            const double ratio = at(i, ncols) / piv;
            if (leave < 0 || ratio < best_ratio - 1e-12) {
                leave = i;
                best_ratio = ratio;
            } else if (ratio <= best_ratio + 1e-12) {
                // tie: compare the scaled rows lexicographically
                const double pl = at(leave, enter);
                for (int j = 0; j < ncols; ++j) {
                    const double di = at(i, j) / piv;
                    const double dl = at(leave, j) / pl;
                    if (di < dl - 1e-14) {
                        leave = i;
                        best_ratio = ratio;
                        break;
                    }
                    if (di > dl + 1e-14) break;
                }
            }
        }
        if (leave < 0) {
            // the phase-1 objective is bounded below, so this is numerical
            throw SwlError(ErrorCode::SolverCycle, "simplex: unbounded phase-1 column");
        }

        // pivot
        const double piv = at(leave, enter);
        for (int j = 0; j <= ncols; ++j) at(leave, j) /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            const double f = at(i, enter);
            if (f == 0.0) continue;
            for (int j = 0; j <= ncols; ++j) at(i, j) -= f * at(leave, j);
            at(i, enter) = 0.0;
        }
        const double fo = obj[enter];
        if (fo != 0.0) {
            for (int j = 0; j <= ncols; ++j) obj[j] -= fo * at(leave, j);
            obj[enter] = 0.0;
        }
        basis[leave] = enter;
    }

    LpResult res;
    res.iterations = iters;
    double scale = 1.0;
    for (double bi : b_in) scale = std::max(scale, std::abs(bi));
    if (obj[ncols] > kFeasTol * scale * std::sqrt(static_cast<double>(m))) {
        res.status = LpStatus::Infeasible;
        return res;
    }
    res.status = LpStatus::Feasible;
    res.x.assign(nv, 0.0);
    for (int i = 0; i < m; ++i) {
        const int bj = basis[i];
        if (bj < nv) res.x[bj] += at(i, ncols);
        else if (bj < 2 * nv) res.x[bj - nv] -= at(i, ncols);
    }
    return res;
}

}  // namespace swl2d
