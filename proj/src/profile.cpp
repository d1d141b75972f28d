#include "shg/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace shg {

double PolyPiece::eval(double x) const {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
}

namespace {

// Real roots of a polynomial (coeffs[k] x^k) via the companion matrix.
std::vector<double> real_roots(const std::vector<double>& coeffs) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && std::abs(coeffs[deg]) < 1e-300) --deg;
    std::vector<double> roots;
    if (deg < 1) return roots;
    if (deg == 1) {
        roots.push_back(-coeffs[0] / coeffs[1]);
        return roots;
    }
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) C(i, deg - 1) = -coeffs[i] / coeffs[deg];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    for (int i = 0; i < deg; ++i) {
        auto ev = es.eigenvalues()[i];
        if (std::abs(ev.imag()) < 1e-10) roots.push_back(ev.real());
    }
    return roots;
}

std::vector<double> derivative(const std::vector<double>& coeffs) {
    std::vector<double> d;
    for (std::size_t k = 1; k < coeffs.size(); ++k) d.push_back(k * coeffs[k]);
    return d;
}

} // namespace

ProfileFn::ProfileFn(std::vector<PolyPiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw DomainError("profile has no pieces");
    const double tol = 1e-12;
    if (std::abs(pieces_.front().a) > tol || std::abs(pieces_.back().b - 1.0) > tol)
        throw DomainError("pieces must cover [0,1]");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (!(pieces_[i].b > pieces_[i].a))
            throw DomainError("piece endpoints must be strictly increasing");
        if (i + 1 < pieces_.size() && std::abs(pieces_[i].b - pieces_[i + 1].a) > tol)
            throw DomainError("pieces must partition [0,1] without gaps or overlaps");
        if (pieces_[i].coeffs.size() > 7)
            throw ParseError("polynomial degree exceeds 6");
        if (pieces_[i].coeffs.empty()) pieces_[i].coeffs = {0.0};
    }
    pieces_.front().a = 0.0;
    pieces_.back().b = 1.0;
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) pieces_[i + 1].a = pieces_[i].b;
}

ProfileFn ProfileFn::constant(double value) { return ProfileFn({PolyPiece{0.0, 1.0, {value}}}); }

ProfileFn ProfileFn::indicator(double a, double b) {
    if (!(a >= 0.0 && b > a && b <= 1.0)) throw DomainError("indicator needs 0 <= a < b <= 1");
    std::vector<PolyPiece> pieces;
    if (a > 0.0) pieces.push_back({0.0, a, {0.0}});
    pieces.push_back({a, b, {1.0}});
    if (b < 1.0) pieces.push_back({b, 1.0, {0.0}});
    return ProfileFn(std::move(pieces));
}

ProfileFn ProfileFn::poly(std::vector<double> coeffs) {
    return ProfileFn({PolyPiece{0.0, 1.0, std::move(coeffs)}});
}

double ProfileFn::operator()(double x) const {
    // left-closed / right-open lookup; x=1 owned by the last piece
    if (x >= pieces_.back().a) return pieces_.back().eval(x);
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](double v, const PolyPiece& p) { return v < p.b; });
    return it->eval(x);
}

std::vector<double> ProfileFn::sample(const Grid& g) const {
    std::vector<double> out(g.n);
    for (int i = 0; i < g.n; ++i) out[i] = (*this)(g.nodes[i]);
    return out;
}

double ProfileFn::sup_abs() const {
    double m = 0.0;
    for (const auto& p : pieces_) {
        m = std::max(m, std::abs(p.eval(p.a)));
        m = std::max(m, std::abs(p.eval(p.b)));
        for (double r : real_roots(derivative(p.coeffs)))
            if (r > p.a && r < p.b) m = std::max(m, std::abs(p.eval(r)));
    }
    return m;
}

double ProfileFn::min_value() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& p : pieces_) {
        m = std::min(m, p.eval(p.a));
        m = std::min(m, p.eval(p.b));
        for (double r : real_roots(derivative(p.coeffs)))
            if (r > p.a && r < p.b) m = std::min(m, p.eval(r));
    }
    return m;
}

bool ProfileFn::is_zero() const { return sup_abs() == 0.0; }

bool ProfileFn::is_continuous(double tol) const {
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
        double left = pieces_[i].eval(pieces_[i].b);
        double right = pieces_[i + 1].eval(pieces_[i + 1].a);
        if (std::abs(left - right) > tol) return false;
    }
    return true;
}

std::vector<double> ProfileFn::breakpoints() const {
    std::vector<double> bp;
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) bp.push_back(pieces_[i].b);
    return bp;
}

namespace {

ProfileFn parse_profile(const nlohmann::json& j, const char* name) {
    if (!j.is_object()) throw ParseError(std::string("profile entry '") + name + "' must be an object");
    const std::string type = j.value("type", "");
    if (type == "constant") {
        if (!j.contains("value")) throw ParseError(std::string(name) + ": constant needs 'value'");
        return ProfileFn::constant(j["value"].get<double>());
    }
    if (type == "indicator") {
        return ProfileFn::indicator(j.value("a", 0.0), j.value("b", 1.0));
    }
    if (type == "poly") {
        if (!j.contains("coeffs")) throw ParseError(std::string(name) + ": poly needs 'coeffs'");
        return ProfileFn::poly(j["coeffs"].get<std::vector<double>>());
    }
    if (type == "piecewise") {
        if (!j.contains("pieces")) throw ParseError(std::string(name) + ": piecewise needs 'pieces'");
        std::vector<PolyPiece> pieces;
        for (const auto& pj : j["pieces"]) {
            PolyPiece p;
            p.a = pj.at("a").get<double>();
            p.b = pj.at("b").get<double>();
            p.coeffs = pj.at("coeffs").get<std::vector<double>>();
            pieces.push_back(std::move(p));
        }
        return ProfileFn(std::move(pieces));
    }
    throw ParseError(std::string(name) + ": unknown profile type '" + type + "'");
}

} // namespace

MediumProfile MediumProfile::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config must be a JSON object");

    Geometry geom;
    const std::string gs = j.value("geometry", "radial");
    if (gs == "radial") geom = Geometry::radial;
    else if (gs == "interval") geom = Geometry::interval;
    else throw ParseError("geometry must be 'radial' or 'interval'");

    auto get = [&](const char* name, double fallback) {
        if (j.contains(name)) return parse_profile(j[name], name);
        return ProfileFn::constant(fallback);
    };
    MediumProfile mp{get("q", 1.0), get("chi1", 0.0), get("chi2", 0.0),
                     get("f", 0.0), geom};
    mp.Q = mp.q.sup_abs();
    if (mp.Q == 0.0) throw InvalidProfile("q must not vanish identically (Q > 0)");
    mp.M = mp.chi1.sup_abs() + mp.chi2.sup_abs();
    if (!mp.q.is_continuous())
        mp.warnings.push_back("q is discontinuous; the C^1 hypothesis on q does not hold");
    return mp;
}

void MediumProfile::validate_grid(const Grid& g) const {
    auto check = [&](const ProfileFn& p, const char* name) {
        for (double bp : p.breakpoints()) {
            double k = bp / g.h;
            if (std::abs(k - std::round(k)) > 1e-9)
                throw DomainError(std::string("piece boundary ") + std::to_string(bp) + " of " +
                                  name + " is not a grid node; choose n so that it is");
        }
    };
    check(q, "q");
    check(chi1, "chi1");
    check(chi2, "chi2");
    check(f, "f");
}

} // namespace shg
