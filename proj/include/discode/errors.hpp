#pragma once

#include <stdexcept>
#include <string>

namespace discode {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the input domain was violated (|z| >= 1, r0 >= r, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation produced a non-finite value (pole, overflow).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// An iterative or adaptive procedure failed to meet its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace discode
