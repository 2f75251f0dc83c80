#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symorb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different fields or rings of different arity.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A precondition on parameters was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A Groebner computation ran out of its pair or wall-clock budget.
// Distinct from a negative verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace symorb
