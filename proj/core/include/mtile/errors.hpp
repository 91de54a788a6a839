#pragma once

#include <stdexcept>
#include <string>

namespace mtile {

// Caller passed values that violate an operation's contract (mismatched
// fields, singular basis, wrong rank).
class SpecificationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Raised when the supplied "minimal" polynomial turns out to have a
// nontrivial factor (found by inversion or by a rational root during
// bisection).
class ReducibleMinpoly : public std::runtime_error {
 public:
  ReducibleMinpoly() : std::runtime_error("minimal polynomial is reducible") {}
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A result that contradicts a proven identity; always an implementation bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mtile
