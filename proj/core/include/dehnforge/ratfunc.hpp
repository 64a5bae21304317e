#pragma once

#include <string>

#include "dehnforge/polynomial.hpp"

namespace dehnforge {

// Element of Q(t, t1, ..., t9): reduced fraction with monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p) {}      // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num, const Poly& den);
  static RatFunc variable(int index) { return RatFunc(Poly::variable(index)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;  // requires is_constant
  std::uint16_t used_variables() const { return num_.used_variables() | den_.used_variables(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    if (!(a.num_ == b.num_)) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  RatFunc inverse() const;
  RatFunc pow(int k) const;
  RatFunc derivative(int var) const;
  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_ = Poly(1);
};

}  // namespace dehnforge
