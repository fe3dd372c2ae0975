#include "swl2d/clf_io.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace swl2d {

using nlohmann::json;

json mat2_to_json(const Mat2& m) {
    return json::array({json::array({m.a11, m.a12}), json::array({m.a21, m.a22})});
}

Mat2 mat2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2) {
        throw SwlError(ErrorCode::InvalidInput, "matrix must be a 2x2 array of numbers");
    }
    for (const auto& row : j) {
        for (const auto& e : row) {
            if (!e.is_number()) {
                throw SwlError(ErrorCode::InvalidInput, "matrix entries must be numeric");
            }
        }
    }
    Mat2 m{j[0][0].get<double>(), j[0][1].get<double>(), j[1][0].get<double>(),
           j[1][1].get<double>()};
    if (!m.all_finite()) throw SwlError(ErrorCode::InvalidInput, "matrix entries must be finite");
    return m;
}

PairInput pair_from_json(const json& j) {
    if (!j.contains("a") || !j.contains("b")) {
        throw SwlError(ErrorCode::InvalidInput, "pair file needs fields 'a' and 'b'");
    }
    PairInput p;
    p.a = mat2_from_json(j.at("a"));
    p.b = mat2_from_json(j.at("b"));
    p.label = j.value("label", "");
    return p;
}

json pair_to_json(const PairInput& p) {
    json j{{"a", mat2_to_json(p.a)}, {"b", mat2_to_json(p.b)}};
    if (!p.label.empty()) j["label"] = p.label;
    return j;
}

namespace {

json forms_to_json(const std::vector<Vec2>& forms) {
    json arr = json::array();
    for (const Vec2& w : forms) arr.push_back(json::array({w.x, w.y}));
    return arr;
}

std::vector<Vec2> forms_from_json(const json& j) {
    std::vector<Vec2> forms;
    for (const auto& e : j) forms.push_back({e[0].get<double>(), e[1].get<double>()});
    return forms;
}

}  // namespace

json clf_to_json(const CLF& clf) {
    json j;
    if (const auto* p = std::get_if<PolyCLF>(&clf)) {
        j["type"] = "poly_sum_of_powers";
        j["power"] = p->power;
        j["forms"] = forms_to_json(p->forms);
        if (!p->coefficients.empty()) j["coefficients"] = p->coefficients;
    } else if (const auto* pt = std::get_if<PolytopeCLF>(&clf)) {
        j["type"] = "polytope";
        j["forms"] = forms_to_json(pt->forms);
    } else if (const auto* ls = std::get_if<LevelSetCLF>(&clf)) {
        j["type"] = "levelset";
        j["zeta"] = ls->zeta;
        j["pair_tilde"] = {{"a", mat2_to_json(ls->a_tilde)}, {"b", mat2_to_json(ls->b_tilde)}};
        j["r_tilde"] = ls->r_tilde.values();
    } else if (const auto* hp = std::get_if<HomogPoly>(&clf)) {
        j["type"] = "homogeneous_poly";
        j["degree"] = hp->degree;
        j["coefficients"] = hp->coeffs;
    }
    return j;
}

CLF clf_from_json(const json& j) {
    const std::string type = j.value("type", "");
    if (type == "poly_sum_of_powers") {
        PolyCLF p;
        p.power = j.at("power").get<int>();
        p.forms = forms_from_json(j.at("forms"));
        if (j.contains("coefficients")) p.coefficients = j["coefficients"].get<std::vector<double>>();
        return p;
    }
    if (type == "polytope") {
        PolytopeCLF p;
        p.forms = forms_from_json(j.at("forms"));
        return p;
    }
    if (type == "levelset") {
        LevelSetCLF ls;
        ls.zeta = j.at("zeta").get<double>();
        ls.a_tilde = mat2_from_json(j.at("pair_tilde").at("a"));
        ls.b_tilde = mat2_from_json(j.at("pair_tilde").at("b"));
        ls.r_tilde = AngularFunction(j.at("r_tilde").get<std::vector<double>>());
        return ls;
    }
    if (type == "homogeneous_poly") {
        HomogPoly hp;
        hp.degree = j.at("degree").get<int>();
        hp.coeffs = j.at("coefficients").get<std::vector<double>>();
        return hp;
    }
    throw SwlError(ErrorCode::InvalidInput, "unknown CLF type '" + type + "'");
}

double clf_evaluate(const CLF& clf, Vec2 x) {
    return std::visit([&](const auto& c) { return c.evaluate(x); }, clf);
}

int clf_degree(const CLF& clf) {
    if (const auto* p = std::get_if<PolyCLF>(&clf)) return p->power;
    if (const auto* hp = std::get_if<HomogPoly>(&clf)) return hp->degree;
    return 1;
}

ClfCheck verify_clf(const CLF& clf, const Mat2& a, const Mat2& b, uint64_t seed,
                    int n_trajectories, const Tolerances& tol) {
    ClfCheck check;
    std::ostringstream detail;

    // positivity on the circle
    for (int s = 0; s < 720 && check.positive; ++s) {
        if (!(clf_evaluate(clf, unit(2.0 * M_PI * s / 720)) > 0.0)) {
            check.positive = false;
            detail << "non-positive value on the unit circle; ";
        }
    }

    // pointwise grid decrease for the differentiable/piecewise types
    const int n_check = 1440;
    for (int s = 0; s < n_check && check.grid_decrease; ++s) {
        const Vec2 x = unit(2.0 * M_PI * s / n_check);
        bool ok = true;
        if (const auto* p = std::get_if<PolyCLF>(&clf)) {
            ok = p->scaled_derivative(x, a * x) < 0.0 && p->scaled_derivative(x, b * x) < 0.0;
        } else if (const auto* hp = std::get_if<HomogPoly>(&clf)) {
            const Vec2 g = hp->gradient(x);
            ok = g.dot(a * x) < 0.0 && g.dot(b * x) < 0.0;
        } else if (const auto* pt = std::get_if<PolytopeCLF>(&clf)) {
            double fmax = 0.0;
            for (const Vec2& w : pt->forms) fmax = std::max(fmax, std::abs(w.dot(x)));
            for (const Vec2& w : pt->forms) {
                const double t = w.dot(x);
                if (std::abs(t) < fmax * (1.0 - tol.tie_tol)) continue;
                const double sgn = t >= 0.0 ? 1.0 : -1.0;
                ok = ok && sgn * w.dot(a * x) < 0.0 && sgn * w.dot(b * x) < 0.0;
            }
        }
        // level-set CLFs are checked along trajectories only
        if (!ok) {
            check.grid_decrease = false;
            detail << "grid decrease failed at sample " << s << "; ";
        }
    }

    // decrease along seeded random switched trajectories, u in [0,1]
    std::mt19937_64 master(seed);
    for (int k = 0; k < n_trajectories && check.trajectory_decrease; ++k) {
        const uint64_t s = master();
        std::mt19937_64 rng(s);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
        const Vec2 x0 = unit(ang(rng));
        const double horizon = 5.0;
        const SwitchSignal sig = random_signal(horizon, s, k % 2 == 0);
        const Trajectory tr = simulate(a, b, sig, x0, horizon, 0.02);
        double prev = clf_evaluate(clf, tr.states.front());
        double window_start_val = prev;
        double window_start_t = 0.0;
        for (size_t i = 1; i < tr.states.size(); ++i) {
            const double cur = clf_evaluate(clf, tr.states[i]);
            if (cur > prev * (1.0 + 1e-9)) {
                check.trajectory_decrease = false;
                detail << "increase along trajectory " << k << " at t=" << tr.times[i] << "; ";
                break;
            }
            if (tr.times[i] - window_start_t >= 1.0) {
                if (!(cur < window_start_val)) {
                    check.trajectory_decrease = false;
                    detail << "no strict decrease over a unit window on trajectory " << k << "; ";
                    break;
                }
                window_start_val = cur;
                window_start_t = tr.times[i];
            }
            prev = cur;
        }
    }

    check.detail = detail.str();
    return check;
}

}  // namespace swl2d
