#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hornlearn {

/// Two values that must share a variable count do not.
struct ArityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A formula or implication violates a structural invariant
/// (empty consequent, index out of range, bad generator config, ...).
struct FormulaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on input outside its documented domain.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A teacher answered in a way no correct teacher can.
struct TeacherError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `line()` is 1-based; 0 means "whole document".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

void throw_arity_mismatch(const char* where, std::size_t expected, std::size_t got);

}  // namespace hornlearn
