#include "shg/grid.hpp"

namespace shg {

Grid Grid::uniform(int n) {
    if (n < 3 || n % 2 == 0)
        throw DomainError("grid node count must be odd and >= 3, got " + std::to_string(n));
    Grid g;
    g.n = n;
    g.h = 1.0 / (n - 1);
    g.nodes.resize(n);
    for (int i = 0; i < n; ++i) g.nodes[i] = i * g.h;
    g.nodes.back() = 1.0;
    return g;
}

std::vector<double> simpson_weights(const Grid& g) {
    std::vector<double> w(g.n, 0.0);
    w.front() = w.back() = g.h / 3.0;
    for (int i = 1; i < g.n - 1; ++i) w[i] = (i % 2 == 1) ? 4.0 * g.h / 3.0 : 2.0 * g.h / 3.0;
    return w;
}

double simpson(const Grid& g, std::span<const double> f) {
    double s = f[0] + f[g.n - 1];
    for (int i = 1; i < g.n - 1; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
    return s * g.h / 3.0;
}

Complex simpson(const Grid& g, std::span<const Complex> f) {
    Complex s = f[0] + f[g.n - 1];
    for (int i = 1; i < g.n - 1; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
    return s * (g.h / 3.0);
}

std::vector<Complex> cumulative_integral(const Grid& g, std::span<const Complex> f) {
    const int n = g.n;
    const double h = g.h;
    std::vector<Complex> out(n, Complex(0.0));
    // closed 4th-order step formulas (Adams-Moulton style on 4 neighbours)
    out[1] = out[0] + h / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
    for (int i = 1; i + 2 < n; ++i)
        out[i + 1] = out[i] + h / 24.0 * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]);
    out[n - 1] = out[n - 2] + h / 24.0 * (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1]);
    return out;
}

std::vector<Complex> second_difference(std::span<const Complex> f, double h) {
    const int n = static_cast<int>(f.size());
    std::vector<Complex> d(n);
    const double ih2 = 1.0 / (h * h);
    for (int i = 1; i < n - 1; ++i) d[i] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) * ih2;
    d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * ih2;
    d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * ih2;
    return d;
}

std::vector<Complex> second_difference4(std::span<const Complex> f, double h) {
    const int n = static_cast<int>(f.size());
    std::vector<Complex> d(n);
    const double ih2 = 1.0 / (h * h);
    for (int i = 2; i < n - 2; ++i)
        d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * (ih2 / 12.0);
    auto row = [&](int i0, int s) {
        // skewed 6-point stencils, fourth order
        static const double c0[6] = {15.0 / 4, -77.0 / 6, 107.0 / 6, -13.0, 61.0 / 12, -5.0 / 6};
        static const double c1[6] = {5.0 / 6, -5.0 / 4, -1.0 / 3, 7.0 / 6, -1.0 / 2, 1.0 / 12};
        Complex a0{}, a1{};
        for (int k = 0; k < 6; ++k) {
            a0 += c0[k] * f[i0 + s * k];
            a1 += c1[k] * f[i0 + s * k];
        }
        return std::pair{a0 * ih2, a1 * ih2};
    };
    auto [d0, d1] = row(0, 1);
    d[0] = d0;
    d[1] = d1;
    auto [dn, dn1] = row(n - 1, -1);
    d[n - 1] = dn;
    d[n - 2] = dn1;
    return d;
}

std::vector<Complex> divide_by_x(const Grid& g, std::span<const Complex> u) {
    std::vector<Complex> out(g.n);
    for (int i = 1; i < g.n; ++i) out[i] = u[i] / g.nodes[i];
    // one-sided 4-point first derivative at x=0
    out[0] = (-11.0 * u[0] + 18.0 * u[1] - 9.0 * u[2] + 2.0 * u[3]) / (6.0 * g.h);
    return out;
}

} // namespace shg
