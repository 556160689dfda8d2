// Exception hierarchy shared by every frobgen module.
//
// Errors split into two families: misuse of the API (bad arguments, parse
// failures) and mathematical invalidity (singular specializations, exhausted
// search budgets). The CLI maps the first family to exit code 1 and the
// second to exit code 2.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobgen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands live in different fields or rings.
class DomainMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The requested object does not exist at this input (a valid answer, not a bug).
class MathError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public MathError {
 public:
  using MathError::MathError;
};

/// A rational function's denominator vanished at a specialization point.
class DenominatorVanishes : public MathError {
 public:
  using MathError::MathError;
};

class BudgetExceeded : public MathError {
 public:
  using MathError::MathError;
};

class NoCyclicVector : public MathError {
 public:
  using MathError::MathError;
};

/// Existence is known but no explicit construction is implemented.
class ExistenceOnly : public MathError {
 public:
  using MathError::MathError;
};

/// Two independent computations disagreed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace frobgen
