#ifndef GEOENT_ERRORS_HPP
#define GEOENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geoent {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidInput : Error { using Error::Error; };
struct DegenerateState : Error { using Error::Error; };
struct BlockTooLarge : Error { using Error::Error; };
struct NumericalBreakdown : Error { using Error::Error; };
struct CriticalDegeneracy : Error { using Error::Error; };
struct CanonicalViolation : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };
struct DegenerateDirection : Error { using Error::Error; };
struct InsufficientPoints : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace geoent

#endif
