#include "qtwist/parser.hpp"

#include <cctype>

namespace qtwist {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  RatFunc run() {
    RatFunc e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (true) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        acc = (acc / d).reduced();
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!eat('^')) return base;
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected integer exponent");
    long e = 0;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      e = e * 10 + (src_[pos_] - '0');
      if (e > 4096) fail("exponent too large");
      ++pos_;
    }
    if (neg && base.is_zero()) fail("zero to a negative power");
    return base.pow(static_cast<int>(neg ? -e : e));
  }

  RatFunc atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc e = expr();
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    return identifier();
  }

  RatFunc number() {
    IntZ n(0);
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      n = n * 10 + (src_[pos_] - '0');
      ++pos_;
    }
    return RatFunc(MPoly(Rat(n)));
  }

  RatFunc identifier() {
    size_t start = pos_;
    // UTF-8 alpha
    if (pos_ + 1 < src_.size() &&
        static_cast<unsigned char>(src_[pos_]) == 0xCE &&
        static_cast<unsigned char>(src_[pos_ + 1]) == 0xB1) {
      pos_ += 2;
      return RatFunc(MPoly::variable(Var::alpha));
    }
    while (pos_ < src_.size() &&
           (std::isalpha(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("unexpected character");
    auto v = var_from_name(src_.substr(start, pos_ - start));
    if (!v) {
      pos_ = start;
      fail("unknown variable '" + std::string(src_.substr(start, 1)) + "'");
    }
    return RatFunc(MPoly::variable(*v));
  }

  std::string_view src_;
  size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expr(std::string_view src) {
  return Parser(src).run().reduced();
}

}  // namespace qtwist
