#pragma once

#include <stdexcept>
#include <string>

namespace ternions {

/// Base class of every error raised by the library. All errors are ordinary
/// exceptions so enumeration loops can catch and skip degenerate cases.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller misuse: mismatched fields, malformed text, invalid arguments.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NonUnitError : public Error {
 public:
  using Error::Error;
};

/// Enumeration requested over an infinite field.
class UnsupportedEnumeration : public UsageError {
 public:
  using UsageError::UsageError;
};

/// A subspace or matrix does not have the rank an operation requires.
class RankError : public Error {
 public:
  RankError(std::string what, std::size_t rank)
      : Error(std::move(what)), rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// A Plücker vector violates one of the linear conditions of the
/// 8-dimensional ambient subspace.
class NotInAmbient : public Error {
 public:
  using Error::Error;
};

/// Parameters whose image is the zero vector (no projective point).
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ternions
