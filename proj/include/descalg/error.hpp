#pragma once

#include <stdexcept>
#include <string>

namespace descalg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that does not match the index grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A composition/prime/rank combination that names no basis element.
class InvalidIndexError : public Error {
 public:
  using Error::Error;
};

class RankMismatchError : public Error {
 public:
  using Error::Error;
};

/// Coefficient arithmetic left the range of Coeff.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Requested group exceeds the configured enumeration cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// A group-algebra vector is not constant on descent classes.
class NotInDescentAlgebraError : public Error {
 public:
  using Error::Error;
};

/// An internal rule or enumeration produced something impossible.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace descalg
