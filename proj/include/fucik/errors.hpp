#pragma once

#include <stdexcept>

namespace fucik {

/// Invalid parameter outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical breakdown (underflow of a pivot, failed decomposition, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The quadrature refinement loop hit its depth limit before reaching the
/// requested tolerance.
class QuadratureNonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fucik
