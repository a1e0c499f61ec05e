#pragma once

#include <stdexcept>
#include <string>

namespace wfield {

/// Raised when a computation cannot produce a trustworthy number: negative
/// Wigner values inside an overlap integral, non-finite integrands, or a
/// truncation that does not converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace wfield
