#pragma once

#include <stdexcept>
#include <string>

namespace cmheight {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The Weierstrass equation has vanishing discriminant.
class SingularCurveError : public Error {
 public:
  using Error::Error;
};

/// A numerical quantity cannot be resolved at the working precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (violated hypothesis or a bug).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed job, curve or matrix file.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where + ": " + what) {}
};

}  // namespace cmheight
