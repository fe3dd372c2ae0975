#include "swl2d/vec2.hpp"

namespace swl2d {

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

Mat2 expm(const Mat2& m, double t) {
    // Write M = mu*I + N with N traceless; then N^2 = (mu^2 - det M)*I and
    // e^{Mt} = e^{mu t} (c(t) I + s(t) N) with c, s cosh/sinh- or cos/sin-type
    // depending on the sign of disc = mu^2 - det M.
    const double mu = 0.5 * m.trace();
    const Mat2 n = m - Mat2::scalar(mu);
    const double disc = mu * mu - m.det();
    const double u = disc * t * t;

    double c, s;
    if (std::abs(u) < 1e-8) {
        // removable singularity: series in u
        c = 1.0 + u * (0.5 + u * (1.0 / 24.0 + u / 720.0));
        s = t * (1.0 + u * (1.0 / 6.0 + u * (1.0 / 120.0 + u / 5040.0)));
    } else if (disc > 0.0) {
        const double w = std::sqrt(disc);
        c = std::cosh(w * t);
        s = std::sinh(w * t) / w;
    } else {
        const double w = std::sqrt(-disc);
        c = std::cos(w * t);
        s = std::sin(w * t) / w;
    }
    const double e = std::exp(mu * t);
    return Mat2::scalar(e * c) + n * (e * s);
}

}  // namespace swl2d
