#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "swl2d/clf_synthesis.hpp"
#include "swl2d/simulator.hpp"

namespace swl2d {

using CLF = std::variant<PolyCLF, PolytopeCLF, LevelSetCLF, HomogPoly>;

nlohmann::json mat2_to_json(const Mat2& m);
Mat2 mat2_from_json(const nlohmann::json& j);

struct PairInput {
    Mat2 a, b;
    std::string label;
};

PairInput pair_from_json(const nlohmann::json& j);
nlohmann::json pair_to_json(const PairInput& p);

nlohmann::json clf_to_json(const CLF& clf);
CLF clf_from_json(const nlohmann::json& j);

double clf_evaluate(const CLF& clf, Vec2 x);
/// Homogeneity degree of the stored function (1 for level-set and polytope,
/// the polynomial degree otherwise).
int clf_degree(const CLF& clf);

struct ClfCheck {
    bool grid_decrease = true;       // pointwise decrease on the circle grid
    bool trajectory_decrease = true; // non-increasing along random switched
                                     // trajectories, strictly over windows
    bool positive = true;
    std::string detail;

    bool valid() const { return grid_decrease && trajectory_decrease && positive; }
};

/// Re-check an exported CLF against a pair: circle-grid decrease (where the
/// type admits a pointwise test), positivity, and decrease along seeded
/// random switched signals.
ClfCheck verify_clf(const CLF& clf, const Mat2& a, const Mat2& b, uint64_t seed,
                    int n_trajectories = 100, const Tolerances& tol = {});

}  // namespace swl2d
