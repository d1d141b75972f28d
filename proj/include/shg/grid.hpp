#ifndef SHG_GRID_HPP
#define SHG_GRID_HPP

#include <complex>
#include <span>
#include <vector>

#include "shg/errors.hpp"

namespace shg {

using Complex = std::complex<double>;

// Uniform grid on [0,1] with an odd node count, so the composite Simpson
// rule applies to the whole grid.
struct Grid {
    int n = 0;
    double h = 0.0;
    std::vector<double> nodes;

    static Grid uniform(int n);
};

// Composite Simpson weights (h/3, 4h/3, 2h/3, ..., h/3).
std::vector<double> simpson_weights(const Grid& g);

double simpson(const Grid& g, std::span<const double> f);
Complex simpson(const Grid& g, std::span<const Complex> f);

// Cumulative integral I(x_i) = int_0^{x_i} f.  Fourth order, with the same
// interior stencil at every step so the error varies smoothly in x (a
// node-parity alternation would be amplified by later second differencing).
std::vector<Complex> cumulative_integral(const Grid& g, std::span<const Complex> f);

// Second differences of a grid function.  The 3-point version is second
// order with one-sided 4-point end rows; the 5-point version is fourth
// order with one-sided 6-point end rows.
std::vector<Complex> second_difference(std::span<const Complex> f, double h);
std::vector<Complex> second_difference4(std::span<const Complex> f, double h);

// values[i]/x_i with the x=0 entry replaced by the one-sided derivative
// estimate (the limit of u/x for u(0)=0).
std::vector<Complex> divide_by_x(const Grid& g, std::span<const Complex> u);

} // namespace shg

#endif
