#pragma once

#include <string>
#include <variant>

#include "dehnforge/ratfunc.hpp"
#include "dehnforge/tower.hpp"

namespace dehnforge {

// An element of Q, of a real quadratic tower, or of Q(t, t1, ..., t9).
// Rational values are shared by both representations and mix freely.
class Scalar {
 public:
  Scalar() : v_(TowerElement()) {}
  Scalar(const Rational& q) : v_(TowerElement(q)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long q) : v_(TowerElement(Rational(q))) {}   // NOLINT(google-explicit-constructor)
  Scalar(TowerElement x) : v_(std::move(x)) {}        // NOLINT(google-explicit-constructor)
  Scalar(RatFunc x);                                  // NOLINT(google-explicit-constructor)

  bool is_ratfunc() const { return std::holds_alternative<RatFunc>(v_); }
  bool is_tower() const { return std::holds_alternative<TowerElement>(v_); }
  bool is_rational() const;
  bool is_zero() const;
  Rational rational_value() const;  // requires is_rational
  const TowerElement& tower() const { return std::get<TowerElement>(v_); }
  const RatFunc& ratfunc() const { return std::get<RatFunc>(v_); }
  RatFunc as_ratfunc() const;       // FieldMismatch for irrational tower elements
  TowerElement as_tower() const;    // FieldMismatch for non-constant functions

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<TowerElement, RatFunc> v_;
};

inline std::string coefficient_string(const Scalar& x) { return x.to_string(); }

enum class ArithOp { Add, Sub, Mul, Div };
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

}  // namespace dehnforge
