#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "tlg/error.hpp"

namespace tlg::detail {

// Minimal recursive-descent helper shared by the literal parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t position() const { return pos_; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }
  std::string_view rest() const { return text_.substr(pos_); }
  std::string_view text() const { return text_; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  // Unsigned run of decimal digits; fails if none.
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected digits");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer() {
    skip_ws();
    bool negative = accept('-');
    if (!negative) accept('+');
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 17) {
      pos_ = start;
      fail("integer literal too large");
    }
    long value = std::stol(d);
    return negative ? -value : value;
  }

  void expect_end() {
    skip_ws();
    if (!at_end()) {
      fail("unexpected trailing input");
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in '" + std::string(text_) + "'", pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace tlg::detail
