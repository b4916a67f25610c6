#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eil {

// Caller violated a documented precondition (mismatched variable sets,
// a non-edge passed as an edge, a zero divisor ideal in a colon, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation refused to run because its search space exceeds a cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph or ideal text. Line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace eil
