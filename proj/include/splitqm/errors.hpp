#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitqm {

/// Raised when an exact identity that must hold by construction fails.
/// Seeing one of these means there is a bug, not bad input.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text that does not match a grammar. `position` is a 1-based column.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument("column " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace splitqm
