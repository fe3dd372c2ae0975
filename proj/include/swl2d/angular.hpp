#pragma once

#include <vector>

#include "swl2d/errors.hpp"

namespace swl2d {

/// Scalar function on the circle, stored on a uniform grid over [0, 2pi)
/// with periodic cubic (Catmull-Rom) interpolation.
class AngularFunction {
public:
    AngularFunction() = default;
    explicit AngularFunction(std::vector<double> values);

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& values() const { return values_; }
    double grid_angle(int i) const;

    double operator()(double theta) const;
    double derivative(double theta) const;
    double second_derivative(double theta) const;

    double min_value() const;
    double max_value() const;

private:
    struct Local {
        double p0, p1, p2, p3, s;  // stencil and in-cell coordinate
        double dtheta;
    };
    Local locate(double theta) const;

    std::vector<double> values_;
};

}  // namespace swl2d
