#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmlogic {

/// Malformed textual input (formulas, trit strings, tables, algebra files).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(std::string message, std::size_t position, std::vector<std::string> expected);

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// A variable index exceeds the arity a formula is evaluated at.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold
/// (incompatible premises, containment violation, size bound, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; indicates a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rmlogic
