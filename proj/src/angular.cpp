#include "swl2d/angular.hpp"

#include <algorithm>
#include <cmath>

namespace swl2d {

AngularFunction::AngularFunction(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 4) {
        throw SwlError(ErrorCode::InvalidInput, "AngularFunction: need at least 4 grid points");
    }
}

double AngularFunction::grid_angle(int i) const {
    return 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(values_.size());
}

AngularFunction::Local AngularFunction::locate(double theta) const {
    const int n = size();
    const double dtheta = 2.0 * M_PI / n;
    double u = theta / dtheta;
    double cell = std::floor(u);
    const double s = u - cell;
    long i = static_cast<long>(cell) % n;
    if (i < 0) i += n;
    const auto at = [&](long k) { return values_[static_cast<size_t>((k % n + n) % n)]; };
    return {at(i - 1), at(i), at(i + 1), at(i + 2), s, dtheta};
}

double AngularFunction::operator()(double theta) const {
    const Local l = locate(theta);
    const double s = l.s;
    // Catmull-Rom basis
    return l.p1 + 0.5 * s * (l.p2 - l.p0 +
                             s * (2.0 * l.p0 - 5.0 * l.p1 + 4.0 * l.p2 - l.p3 +
                                  s * (3.0 * (l.p1 - l.p2) + l.p3 - l.p0)));
}

double AngularFunction::derivative(double theta) const {
    const Local l = locate(theta);
    const double s = l.s;
    const double ds = 0.5 * (l.p2 - l.p0) +
                      s * (2.0 * l.p0 - 5.0 * l.p1 + 4.0 * l.p2 - l.p3) +
                      1.5 * s * s * (3.0 * (l.p1 - l.p2) + l.p3 - l.p0);
    return ds / l.dtheta;
}

double AngularFunction::second_derivative(double theta) const {
    const Local l = locate(theta);
    const double s = l.s;
    const double d2 = (2.0 * l.p0 - 5.0 * l.p1 + 4.0 * l.p2 - l.p3) +
                      3.0 * s * (3.0 * (l.p1 - l.p2) + l.p3 - l.p0);
    return d2 / (l.dtheta * l.dtheta);
}

double AngularFunction::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double AngularFunction::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

}  // namespace swl2d
