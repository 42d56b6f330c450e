#pragma once

#include <stdexcept>
#include <string>

namespace vsym {

/// Input that does not parse (word syntax, JSON documents, element files).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A group parameter outside the range where a construction is defined.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Exhaustive computation refused because it would exceed its budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Any other violated precondition.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

[[noreturn]] inline void fail_domain(const std::string& msg) { throw DomainError(msg); }

}  // namespace vsym
