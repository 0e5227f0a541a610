#ifndef FLUXQ_ERRORS_HPP
#define FLUXQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fluxq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// rf-SQUID geometry and solver failures
struct NoDoubleWell : Error { using Error::Error; };
struct SingularSensitivity : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };
struct PerturbationInvalid : Error { using Error::Error; };

// Ising chain / renormalization
struct LongitudinalTooLarge : Error { using Error::Error; };
struct AtCriticality : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// coupled inductors
struct RatioTooLarge : Error { using Error::Error; };

// transmission line geometry
struct GeometryInvalid : Error { using Error::Error; };

// noise integration
struct QuadratureFailure : Error { using Error::Error; };

// electron-qubit state propagation
struct NotNormalized : Error { using Error::Error; };

// design pipeline
struct InfeasibleDesign : Error { using Error::Error; };

// config / reporting front end
struct ParseError : Error { using Error::Error; };
struct UnitError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace fluxq

#endif
