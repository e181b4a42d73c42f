#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace barricade {

/// Malformed text input. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Input that parses but violates a model invariant (weights, ids, ranges).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to enumerate more than its guard allows.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace barricade
