#pragma once

#include <stdexcept>
#include <string>

namespace liecoh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or file input (scalar syntax, JSON layout, unknown names).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands live in spaces of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for the input.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A configured size or page cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold for valid input was found violated.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

}  // namespace liecoh
