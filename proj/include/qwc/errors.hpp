#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwc {

// A documented hypothesis of an operation does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Support values do not share one quadratic form (common a and square-free
// delta). This is exactly the failure that refutes periodicity.
class InvalidSupportError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input; `position` is the 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qwc
