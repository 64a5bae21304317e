#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dehnforge/integer_factor.hpp"

namespace dehnforge {

// Element of the multiquadratic field generated by square roots of rationals.
// Coordinates are indexed by signed squarefree radicands m; the basis element
// for m is sqrt(m), taken positive for m > 0 and equal to i*sqrt(|m|) for
// m < 0. Radicand 1 is the rational part.
class TowerElement {
 public:
  using Coords = std::map<Integer, Rational>;

  TowerElement() = default;
  TowerElement(const Rational& c);  // NOLINT(google-explicit-constructor)
  TowerElement(long c) : TowerElement(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  // sqrt(m) for a signed squarefree m.
  static TowerElement sqrt_radicand(const Integer& m);
  // Canonical root of a rational: a*sqrt(m) with a >= 0 rational.
  static TowerElement sqrt_rational(const Rational& r);
  static TowerElement imaginary_unit() { return sqrt_radicand(-1); }

  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational
  bool is_real() const;             // no negative radicand in the support
  std::vector<Integer> support() const;
  Rational coefficient(const Integer& m) const;

  TowerElement operator-() const;
  TowerElement& operator+=(const TowerElement& o);
  TowerElement& operator-=(const TowerElement& o);
  TowerElement& operator*=(const TowerElement& o);
  TowerElement& operator/=(const TowerElement& o);
  friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
  friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator/(TowerElement a, const TowerElement& b) { return a /= b; }
  friend bool operator==(const TowerElement& a, const TowerElement& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const TowerElement& a, const TowerElement& b);

  TowerElement inverse() const;
  TowerElement scaled(const Rational& c) const;
  // Complex conjugate (negates every negative-radicand coordinate).
  TowerElement conjugate() const;
  std::string to_string() const;

 private:
  void add(const Integer& m, const Rational& c);
  Coords coords_;
};

// Product of basis elements: sqrt(m1)*sqrt(m2) = scalar * sqrt(m).
struct RadicandProduct {
  Rational scalar;
  Integer radicand;
};
RadicandProduct multiply_radicands(const Integer& m1, const Integer& m2);

// Signed squarefree core of a nonzero rational: r = q^2 * core, q rational.
Integer signed_core(const Rational& r);

// Square root of x inside the field generated by x and the given radicands,
// or nullopt when x is not a square there.
std::optional<TowerElement> sqrt_in_field(const TowerElement& x, const std::vector<Integer>& radicands);

// Ordered record of adjoined square roots. All towers are subfields of one
// ambient multiquadratic field, so elements of different towers can be mixed
// and the result lies in their compositum.
class TowerField {
 public:
  TowerField() = default;
  explicit TowerField(std::vector<Integer> adjunctions) : adjunctions_(std::move(adjunctions)) {}

  const std::vector<Integer>& adjunctions() const { return adjunctions_; }
  std::size_t degree() const { return std::size_t{1} << adjunctions_.size(); }
  bool is_real() const;
  bool contains(const TowerElement& x) const;
  std::string to_string() const;
  friend bool operator==(const TowerField&, const TowerField&) = default;

 private:
  std::vector<Integer> adjunctions_;
};

struct Adjunction {
  TowerField field;
  std::optional<TowerElement> witness;  // set when the radicand was already a square
  TowerElement root;                    // sqrt(d) in the returned field
};

// Adjoins sqrt(d). Negative radicands are rejected unless allow_imaginary,
// which yields a non-real tower. Radicands that are neither rational nor
// squares in f raise UnsupportedRadicand.
Adjunction adjoin_sqrt(const TowerField& f, const TowerElement& d, bool allow_imaginary = false);

}  // namespace dehnforge
