#pragma once

#include <stdexcept>

namespace hyperorth {

/// Operands live in different torus dimensions.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parameter outside the admissible domain of an operation.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (rationals, weights, config documents).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A Laurent polynomial expected to be W-invariant is not.
struct InvarianceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact division left a nonzero remainder.
struct DivisibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A Gram system turned out singular.
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hyperorth
