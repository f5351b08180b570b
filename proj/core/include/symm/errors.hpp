#pragma once

#include <stdexcept>
#include <string>

namespace symm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonMonicError : public Error {
 public:
  explicit NonMonicError(const std::string& where)
      : Error(where + ": polynomial must be monic") {}
};

class NonHyperbolicError : public Error {
 public:
  using Error::Error;
};

/// The second polynomial of a separation test is not real-rooted.
class NonHyperbolicQError : public NonHyperbolicError {
 public:
  using NonHyperbolicError::NonHyperbolicError;
};

class DegreeMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// Raised when an algebraically exact division leaves a remainder.
/// Indicates an arithmetic fault, never a property of the input.
class NonzeroRemainderError : public Error {
 public:
  using Error::Error;
};

class MultipleRootError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace symm
