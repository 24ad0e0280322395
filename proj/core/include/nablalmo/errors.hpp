#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nablalmo {

/// Raised when an input is well formed but mathematically rejected: a
/// singular surgery block, a polynomial outside the expected ring, a series
/// that is not in the image of a map.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the text and file readers.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(position == npos
                               ? what
                               : what + " at position " + std::to_string(position)),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nablalmo
