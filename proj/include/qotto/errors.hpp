#pragma once

#include <stdexcept>
#include <string>

namespace qotto {

/// Base class for runtime numerical failures (overflow, breakdown, truncation).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite input produced a value outside the floating-point exponent range.
struct OverflowError : NumericalError {
    using NumericalError::NumericalError;
};

/// Probability mass dropped by the level-set intersection exceeded the configured bound.
struct TruncationError : NumericalError {
    double loss;
    TruncationError(const std::string& msg, double loss_) : NumericalError(msg), loss(loss_) {}
};

/// Wavefunction amplitude has not decayed at the quadrature grid endpoints.
struct NonConvergentTailError : NumericalError {
    using NumericalError::NumericalError;
};

/// A regime-specific figure of merit was requested outside its regime.
struct RegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace qotto
