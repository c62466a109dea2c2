#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace z2c {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `position` is a 0-based character offset.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Request outside what the library can construct (e.g. exceptional algebras
/// at the structure-constant level).
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// An operation's precondition does not hold for the given data.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A computation exceeded its configured size budget.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. Jacobi identity, involution axioms).
class CheckError : public Error {
public:
  using Error::Error;
};

}  // namespace z2c
