#include "dehnforge/scalar.hpp"

#include "dehnforge/error.hpp"

namespace dehnforge {

Scalar::Scalar(RatFunc x) {
  if (x.is_constant())
    v_ = TowerElement(x.constant_value());
  else
    v_ = std::move(x);
}

bool Scalar::is_rational() const { return is_tower() && tower().is_rational(); }

bool Scalar::is_zero() const { return is_tower() ? tower().is_zero() : ratfunc().is_zero(); }

Rational Scalar::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::FieldMismatch, to_string() + " is not rational");
  return tower().rational_value();
}

RatFunc Scalar::as_ratfunc() const {
  if (is_ratfunc()) return ratfunc();
  if (!tower().is_rational())
    throw Error(ErrorCode::FieldMismatch, tower().to_string() + " is not in a rational function field");
  return RatFunc(tower().rational_value());
}

TowerElement Scalar::as_tower() const {
  if (is_tower()) return tower();
  throw Error(ErrorCode::FieldMismatch, ratfunc().to_string() + " is not in a quadratic tower");
}

namespace {

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.is_tower() && b.is_tower()) return Scalar(op(a.tower(), b.tower()));
  return Scalar(op(a.as_ratfunc(), b.as_ratfunc()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division of " + a.to_string() + " by zero");
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

Scalar Scalar::operator-() const {
  if (is_tower()) return Scalar(-tower());
  return Scalar(-ratfunc());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_tower() != b.is_tower()) return false;
  if (a.is_tower()) return a.tower() == b.tower();
  return a.ratfunc() == b.ratfunc();
}

std::string Scalar::to_string() const { return is_tower() ? tower().to_string() : ratfunc().to_string(); }

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return {};
}

}  // namespace dehnforge
