#pragma once

#include <stdexcept>
#include <string>

namespace yule {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grid is not uniform, misses an endpoint, or has an incompatible size.
class GridError : public Error {
 public:
  using Error::Error;
};

/// A sample value is NaN/Inf or otherwise outside its domain.
class ValueError : public Error {
 public:
  using Error::Error;
};

/// Decimation factor does not divide the subinterval count.
class NonDivisibleDecimation : public Error {
 public:
  using Error::Error;
};

/// A path is constant on its grid, so variance-normalized quantities
/// are undefined.
class DegeneratePath : public Error {
 public:
  using Error::Error;
};

/// A variance bracket came out negative beyond the roundoff band,
/// signalling inconsistent inputs.
class NegativeDiscriminant : public Error {
 public:
  using Error::Error;
};

/// Requested quadrature tolerance could not be reached.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// An integral that must be nonnegative evaluated negative beyond
/// tolerance; indicates a quadrature bug, not a valid state.
class NegativeRadicand : public Error {
 public:
  using Error::Error;
};

/// Circulant spectrum has negative eigenvalues beyond tolerance and the
/// grid is too large for the dense fallback.
class EmbeddingFailure : public Error {
 public:
  using Error::Error;
};

/// Correlation parameter outside [-1, 1].
class InvalidR : public Error {
 public:
  using Error::Error;
};

/// Malformed input stream or unreadable/unwritable file.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace yule
