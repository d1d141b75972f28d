#ifndef SHG_ERRORS_HPP
#define SHG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shg {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Config / profile loading
struct ParseError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct InvalidProfile : Error { using Error::Error; };

// Geometry / quadrature
struct GeometryError : Error { using Error::Error; };
struct SingularIntegrand : Error { using Error::Error; };

// Root scanning
struct NonRealProfile : Error { using Error::Error; };
struct CoverageError : Error { using Error::Error; };

// Forced solver
struct OnLambda : Error { using Error::Error; };
struct ZeroSource : Error { using Error::Error; };
struct NonInvertible : Error { using Error::Error; };
struct SingularShooting : Error { using Error::Error; };
struct NoContraction : Error { using Error::Error; };

// Projection lab
struct OutsideOmegaQ : Error { using Error::Error; };
struct DegenerateChi2 : Error { using Error::Error; };

// Internal consistency checks that should never fire on valid inputs.
struct NumericsError : Error { using Error::Error; };

} // namespace shg

#endif
