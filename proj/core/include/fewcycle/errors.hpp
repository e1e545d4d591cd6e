#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fewcycle {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a domain invariant (tau_p <= 0, non-unit trace, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration text. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownKeyError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Step size undersamples the fastest carrier.
class StepTooLarge : public Error {
 public:
  using Error::Error;
};

/// Trace drifted or the state became non-finite during propagation.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

/// File could not be opened or written; the message names the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fewcycle
