#pragma once

#include <stdexcept>
#include <string>

namespace genuskit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad modulus, shape mismatch, non-subgroup, parse failure.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured element cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Matrix size beyond what cofactor expansion supports.
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// A result contradicts a proven bound. Indicates a bug, never user error.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace genuskit
