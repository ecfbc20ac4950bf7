#pragma once

#include <stdexcept>
#include <string>

namespace frameforge {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

/// Requested an extreme-point enumeration on a smooth (p not in {1, inf}) norm.
struct NonPolyhedralNormError : Error {
  using Error::Error;
};

/// An exact enumeration would exceed the configured size cap.
struct DimensionTooLargeError : Error {
  using Error::Error;
};

/// Exact operator norms are only available for p in {1, 2, inf}.
struct UnsupportedExactNormError : Error {
  using Error::Error;
};

struct SingularBasisError : Error {
  using Error::Error;
};

struct NotAFrameError : Error {
  using Error::Error;
};

struct NotIdempotentError : Error {
  using Error::Error;
};

struct RangeMismatchError : Error {
  using Error::Error;
};

struct NotASchauderFrameError : Error {
  using Error::Error;
};

struct NotBesselianCertifiedError : Error {
  using Error::Error;
};

struct LevelTooLargeError : Error {
  using Error::Error;
};

struct UnsupportedProductNormError : Error {
  using Error::Error;
};

/// Malformed descriptors, bad exponents, empty inputs and the like.
struct InvalidArgumentError : Error {
  using Error::Error;
};

}  // namespace frameforge
