#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbnn {

// Malformed textual input (permutation, state, CSV, JSON field).
// `position` is the 0-based character or token index of the fault.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Request exceeds the configured exhaustive-analysis bound. Exhaustive work
// is refused outright, never silently downgraded to sampling.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pbnn
