#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace betti {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: parse failures, unknown variables, bad exponents.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A configured size bound was exceeded.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t bound)
      : Error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}
  std::size_t bound() const { return bound_; }

 private:
  std::size_t bound_;
};

// Operands live in different polynomial rings.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotSquarefreeError : public PreconditionError {
 public:
  NotSquarefreeError() : PreconditionError("ideal is not squarefree") {}
};

// Raised for the zero or unit ideal where an operation has no meaning.
class DegenerateIdealError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace betti
