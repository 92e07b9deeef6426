#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qtwist/ratfunc.hpp"

namespace qtwist {

// Syntax error with the byte offset of the offending token.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)),
        pos(offset) {}
  size_t pos;
};

// Arithmetic expressions over the variables t, u, alpha (or the UTF-8
// letter), z, T, x with integer literals, + - * / ^ and parentheses.
// '^' takes an integer exponent (negative allowed, giving a rational
// function). '/' by the zero polynomial is a DomainError. The result is
// fully reduced.
RatFunc parse_expr(std::string_view src);

}  // namespace qtwist
