#pragma once

#include <stdexcept>
#include <string>

namespace gld {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, unknown config keys, out-of-range fields.
struct SchemaError : Error {
  using Error::Error;
};

/// An enumeration or combinatorial cap was exceeded.
struct SizeError : Error {
  using Error::Error;
};

/// Structural invariant violated (antisymmetry, Jacobi, nilpotency,
/// mixed weight classes, unsupported event shapes).
struct ValidationError : Error {
  using Error::Error;
};

/// Numerical failure: degenerate Gram matrix, flow refinement not
/// converging, root finder out of range.
struct NumericError : Error {
  using Error::Error;
};

/// An estimator could not produce usable data (e.g. zero Monte Carlo hits).
struct InsufficientDataError : Error {
  using Error::Error;
};

}  // namespace gld
