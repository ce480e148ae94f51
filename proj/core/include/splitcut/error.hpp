#pragma once

#include <stdexcept>
#include <string>

namespace splitcut {

// Malformed input: dimension mismatches, unparsable text, broken invariants
// of a value being constructed.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A geometric construction collapsed (zero normal, integral anchor product).
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace splitcut
