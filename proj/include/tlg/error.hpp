#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by an otherwise well-formed value (division by zero,
// point outside a domain, mismatched dimensions, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. `position` is a 0-based byte offset into the text
// that was being parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tlg
