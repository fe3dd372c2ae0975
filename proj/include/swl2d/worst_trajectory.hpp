#pragma once

#include <optional>
#include <vector>

#include "swl2d/core2d.hpp"

namespace swl2d {

/// Q(x) = det(Ax, Bx) = q0 x1^2 + q1 x1 x2 + q2 x2^2, the collinearity form.
/// Its zero set is where the two fields are parallel and is the only place
/// the worst trajectory can switch.
struct CollinearityForm {
    std::array<double, 3> q{};
    int n_lines = 0;
    std::array<double, 2> angles{};  // line directions in [0, pi)
    std::array<double, 2> slopes{};  // tan(angle); +-inf for a vertical line
    bool degenerate = false;         // Q identically zero (proportional fields)

    double eval(Vec2 x) const { return q[0] * x.x * x.x + q[1] * x.x * x.y + q[2] * x.y * x.y; }
    double scale() const;
};

/// Non-throwing variant; degeneracy is flagged.
CollinearityForm collinearity_form(const Mat2& a, const Mat2& b, const Tolerances& tol = {});

/// Throws DegenerateQ when the fields are everywhere collinear.
CollinearityForm collinearity(const Mat2& a, const Mat2& b, const Tolerances& tol = {});

enum class ActiveField { A, B };

struct StopRule {
    enum class Kind { HalfTurn, FullTurn, FixedTime };
    Kind kind = Kind::HalfTurn;
    double time = 0.0;

    static StopRule half_turn() { return {Kind::HalfTurn, 0.0}; }
    static StopRule full_turn() { return {Kind::FullTurn, 0.0}; }
    static StopRule fixed_time(double t) { return {Kind::FixedTime, t}; }
};

struct Arc {
    ActiveField field;
    double duration;
    Vec2 start;
};

struct TrajectorySample {
    double t;
    Vec2 x;
    ActiveField field;
};

struct WorstTrajectory {
    std::vector<Arc> arcs;
    std::vector<TrajectorySample> samples;
    Vec2 start, end;
    double total_time = 0.0;
    double total_angle = 0.0;  // signed, unwrapped
    std::optional<double> half_turn_factor;
    std::optional<double> period;  // set by the full-turn stop rule
    bool closed = false;
    bool stalled = false;  // polar angle stopped advancing before the target
    int rotation_sign = 0;
};

/// Follow the trajectory whose velocity points most outward per unit of angle
/// swept: between collinearity lines this is the field D maximizing
/// sigma * (x.Dx)/det(x, Dx), which compares as sigma * Q(x), so switches
/// happen exactly on Q^-1(0). Arcs are exact matrix-exponential flows;
/// events are located by bisection.
WorstTrajectory integrate_worst(const Mat2& a, const Mat2& b, Vec2 x0, StopRule stop,
                                const Tolerances& tol = {});

/// Ratio of final to initial radius. Throws NoRotation if the trajectory
/// stalled before completing its stop rule.
double contraction(const WorstTrajectory& traj);

}  // namespace swl2d
