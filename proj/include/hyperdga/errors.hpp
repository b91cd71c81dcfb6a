#pragma once

#include <stdexcept>
#include <string>

namespace hyperdga {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A point violates the constraints of its hyperbolic model.
struct InvalidPoint : Error {
  using Error::Error;
};

/// An arccosh argument (or similar) left its mathematical domain by more
/// than the documented clamping tolerance.
struct NumericalDomain : Error {
  using Error::Error;
};

/// Input sites are affinely dependent (no full-dimensional complex exists).
struct DegenerateInput : Error {
  using Error::Error;
};

/// Two sites (or source points) coincide exactly.
struct DuplicateSite : Error {
  using Error::Error;
};

/// An iterative solver hit its iteration cap before reaching tolerance.
struct MaxIterations : Error {
  using Error::Error;
};

/// A point list that must be nonempty is empty.
struct EmptyInput : Error {
  using Error::Error;
};

/// The pruned complex has no edges, so edge proportions are undefined.
struct EmptyGraph : Error {
  using Error::Error;
};

/// Assignment-based metrics require equal cardinalities.
struct CardinalityMismatch : Error {
  using Error::Error;
};

/// Correlation of a constant sequence is undefined.
struct ZeroVariance : Error {
  using Error::Error;
};

/// Binary vectors of different lengths cannot be compared.
struct LengthMismatch : Error {
  using Error::Error;
};

/// Requested tree depth outside the supported range.
struct DepthOutOfRange : Error {
  using Error::Error;
};

/// Malformed input file; message carries row-level diagnostics.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace hyperdga
