#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace g2 {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Substitution failed: nonpositive q, or the denominator vanishes at q.
struct EvaluationError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        pos(position) {}
  std::size_t pos;
};

struct ArityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A rewrite terminated on something outside the expected basis.
struct IrreducibleResidue : std::logic_error {
  using std::logic_error::logic_error;
};

// Internal consistency failure of the rewrite engine or a hard-coded formula.
struct Defect : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace g2
