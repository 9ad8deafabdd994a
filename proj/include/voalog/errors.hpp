#ifndef VOALOG_ERRORS_HPP
#define VOALOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace voalog {

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A vector outside the group the cocycle convention is declared on.
struct UnregisteredVector : EngineError {
  using EngineError::EngineError;
};

/// The requested mode index does not exist on the given sector
/// (the x-exponent would be non-integral relative to the mode grid).
struct NonIntegralExponent : EngineError {
  using EngineError::EngineError;
};

/// Deformed action requested for a vector outside Ker v_0.
struct NotInKernel : EngineError {
  using EngineError::EngineError;
};

/// v_0 failed the declared nilpotency bound.
struct NotNilpotent : EngineError {
  using EngineError::EngineError;
};

struct NonIntegralWeight : EngineError {
  using EngineError::EngineError;
};

struct CutoffTooSmall : EngineError {
  using EngineError::EngineError;
};

/// Characteristic polynomial has an irreducible factor of degree > 1.
struct IrrationalEigenvalue : EngineError {
  using EngineError::EngineError;
};

struct InvalidParameters : EngineError {
  using EngineError::EngineError;
};

struct ConfigError : EngineError {
  using EngineError::EngineError;
};

}  // namespace voalog

#endif  // VOALOG_ERRORS_HPP
