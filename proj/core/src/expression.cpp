#include "dehnforge/expression.hpp"

#include <cctype>
#include <string>

#include "dehnforge/error.hpp"

namespace dehnforge {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "at position " + std::to_string(pos_) + ": " + msg,
                std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+'))
        v = v + term();
      else if (accept('-'))
        v = v - term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    Scalar r(1);
    for (long i = 0; i < e; ++i) r = r * base;
    if (neg) {
      if (r.is_zero()) fail("zero to a negative power");
      r = Scalar(1) / r;
    }
    return r;
  }

  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (name == "sqrt") {
        expect('(');
        const std::size_t at = pos_;
        Scalar arg = expr();
        expect(')');
        return root(arg, at);
      }
      const int var = variable_index(name);
      if (var < 0) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      return Scalar(RatFunc::variable(var));
    }
    if (accept('(')) {
      Scalar v = expr();
      expect(')');
      return v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Scalar root(const Scalar& arg, std::size_t at) {
    if (!arg.is_tower()) {
      pos_ = at;
      fail("square roots of rational functions are not supported");
    }
    const TowerElement& x = arg.tower();
    if (auto y = sqrt_in_field(x, {})) return Scalar(*y);
    if (x.is_rational()) return Scalar(TowerElement::sqrt_rational(x.rational_value()));
    pos_ = at;
    fail("nested radical sqrt(" + x.to_string() + ") is not in a multiquadratic tower");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace dehnforge
