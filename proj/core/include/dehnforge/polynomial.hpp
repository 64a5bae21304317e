#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dehnforge/integer_factor.hpp"

namespace dehnforge {

// Indeterminates are drawn from a fixed global alphabet: index 0 is `t`,
// indices 1..9 are `t1`..`t9`. Every polynomial lives in Q[t, t1, ..., t9].
inline constexpr int kMaxVars = 10;
std::string variable_name(int index);
int variable_index(const std::string& name);  // -1 if unknown

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  int total_degree() const;
  bool divides(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);  // requires divides
  // Lex order with variable 0 most significant.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly variable(int index);
  static Poly monomial(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant
  // Lex-leading term; requires nonzero.
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  int degree_in(int var) const;
  int total_degree() const;
  std::uint16_t used_variables() const;  // bitmask
  int num_variables() const;
  int single_variable() const;  // index if univariate in exactly one var, else -1

  // Coefficient of var^k viewed as polynomial in the remaining variables.
  Poly coefficient_in(int var, int k) const;
  Poly leading_in(int var) const { return coefficient_in(var, degree_in(var)); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Poly& a, const Poly& b);

  Poly scaled(const Rational& c) const;
  Poly pow(unsigned k) const;
  Poly derivative(int var) const;
  Rational evaluate(const std::array<Rational, kMaxVars>& point) const;

  // Scales so that the lex-leading coefficient is 1; returns the removed factor.
  Rational make_monic();
  Poly monic() const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

// Exact quotient; throws InvalidInput if b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);
// Division with remainder when b is univariate in `var` over Q (a, b univariate).
std::pair<Poly, Poly> univariate_divmod(const Poly& a, const Poly& b, int var);
// Monic gcd (gcd(0, 0) = 0).
Poly gcd(const Poly& a, const Poly& b);

struct PolyFactorization {
  Rational unit;  // leading coefficient removed from the input
  std::vector<std::pair<Poly, int>> factors;  // monic, irreducible, sorted
};
// Factors a nonzero polynomial into monic irreducibles. Univariate input is
// always supported; multivariate squarefree parts must have degree one in some
// variable after content removal, otherwise UnsupportedField is thrown.
PolyFactorization factor_poly(const Poly& p);

}  // namespace dehnforge
