#pragma once

#include <stdexcept>
#include <string>

namespace patdual {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (fractions, alphabets, pattern literals, CLI flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An input violates a documented precondition or type invariant.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Arithmetic that has no defined value: x/0, a pole at z = 1, a
// denominator without a constant term where a power series is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(std::size_t column, const std::string& what)
      : Error(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace patdual
