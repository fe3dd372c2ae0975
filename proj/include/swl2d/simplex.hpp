#pragma once

#include <vector>

#include "swl2d/errors.hpp"

namespace swl2d {

enum class LpStatus { Feasible, Infeasible };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;  // a feasible point when status == Feasible
    int iterations = 0;
};

/// Feasibility of { x free : M x >= b } by a dense two-phase simplex on the
/// standard form (x split into positive parts, surplus and artificial
/// variables per row). Phase one minimizes the artificial sum; the problem
/// is feasible iff that minimum is (numerically) zero. Lexicographic ratio
/// test for anti-cycling; throws SolverCycle past the iteration cap.
LpResult lp_feasible_geq(const std::vector<std::vector<double>>& m,
                         const std::vector<double>& b, int iter_cap);

}  // namespace swl2d
