#ifndef SHG_PROFILE_HPP
#define SHG_PROFILE_HPP

#include <string>
#include <vector>

#include "shg/grid.hpp"

namespace shg {

// One polynomial piece on [a,b).  coeffs[k] multiplies x^k; degree <= 6.
struct PolyPiece {
    double a = 0.0;
    double b = 1.0;
    std::vector<double> coeffs;

    double eval(double x) const;
};

// Piecewise polynomial on [0,1].  Pieces partition [0,1] exactly; a point is
// owned by the piece whose interval is [a,b) except x=1, owned by the last
// piece.
class ProfileFn {
  public:
    explicit ProfileFn(std::vector<PolyPiece> pieces);

    static ProfileFn constant(double value);
    static ProfileFn indicator(double a, double b);
    static ProfileFn poly(std::vector<double> coeffs);

    double operator()(double x) const;
    std::vector<double> sample(const Grid& g) const;

    // Exact sup of |p| over [0,1] (endpoint + critical-point search per piece).
    double sup_abs() const;
    // Minimum over [0,1], same search.
    double min_value() const;

    bool is_zero() const;
    bool is_continuous(double tol = 1e-12) const;
    // Interior piece boundaries (excludes 0 and 1).
    std::vector<double> breakpoints() const;

    const std::vector<PolyPiece>& pieces() const { return pieces_; }

  private:
    std::vector<PolyPiece> pieces_;
};

enum class Geometry { interval, radial };

// Coefficient triple (q, chi1, chi2) plus source f.  Immutable after load.
struct MediumProfile {
    ProfileFn q;
    ProfileFn chi1;
    ProfileFn chi2;
    ProfileFn f;
    Geometry geometry = Geometry::radial;
    double Q = 0.0; // sup|q|
    double M = 0.0; // sup|chi1| + sup|chi2|
    std::vector<std::string> warnings;

    static MediumProfile from_json_text(const std::string& text);

    // Piece breakpoints of all four profiles must land on grid nodes
    // (quadrature and RK4 stage evaluation assume it).
    void validate_grid(const Grid& g) const;
};

} // namespace shg

#endif
