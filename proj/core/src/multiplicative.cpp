#include "dehnforge/multiplicative.hpp"

#include <numeric>

#include "dehnforge/error.hpp"
#include "dehnforge/expression.hpp"
#include "dehnforge/integer_factor.hpp"
#include "dehnforge/polynomial.hpp"

namespace dehnforge {

namespace {

std::string prime_symbol(const Integer& p) { return "p:" + p.get_str(); }

void add_rational(MultiplicativeFactorization& out, const Rational& q) {
  if (q < 0) out.sign = -out.sign;
  if (q.get_num() != 1 && q.get_num() != -1)
    for (const auto& [p, e] : factor_integer(q.get_num())) out.factors.emplace_back(prime_symbol(p), e);
  if (q.get_den() != 1)
    for (const auto& [p, e] : factor_integer(q.get_den())) out.factors.emplace_back(prime_symbol(p), -e);
}

void add_poly(MultiplicativeFactorization& out, const Poly& p, int direction, Rational& unit) {
  const PolyFactorization f = factor_poly(p);
  if (direction > 0)
    unit *= f.unit;
  else
    unit /= f.unit;
  for (const auto& [g, e] : f.factors) out.factors.emplace_back("f:" + g.to_string(), direction * long{e});
}

void add_rational_vector(QSum& v, const Rational& q, const Rational& scale) {
  MultiplicativeFactorization f;
  add_rational(f, q);
  for (const auto& [s, e] : f.factors) v.add(s, scale * e);
}

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// a + b*sqrt(d), d < 0 squarefree: the x / conj(x) part on split primes.
void add_imaginary_quadratic(QSum& v, const Rational& a, const Rational& b, const Integer& d) {
  Integer c;
  mpz_lcm(c.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  const Integer big_a = Integer(a * c);
  const Integer big_b = Integer(b * c);
  const Integer norm = big_a * big_a - d * big_b * big_b;
  for (const auto& [p, e] : factor_integer(norm)) {
    if (!splits_in_quadratic(d, p)) continue;
    const int k = e + 1;
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
    const Integer r = padic_sqrt(mod_positive(d, pk), p, k);
    const Integer img = mod_positive(big_a + big_b * r, pk);
    const int val = img == 0 ? k : valuation(img, p);
    Rational half_e(e, 2);
    half_e.canonicalize();
    v.add("q:" + d.get_str() + ":" + p.get_str(), Rational(val) - half_e);
  }
}

}  // namespace

MultiplicativeFactorization factor_multiplicative(const Scalar& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "zero has no multiplicative factorization");
  MultiplicativeFactorization out;
  if (x.is_tower()) {
    if (!x.tower().is_rational())
      throw Error(ErrorCode::UnsupportedField,
                  "unique factorization is unavailable in the tower containing " + x.to_string(), x.to_string());
    add_rational(out, x.tower().rational_value());
    return out;
  }
  Rational unit = 1;
  add_poly(out, x.ratfunc().num(), 1, unit);
  add_poly(out, x.ratfunc().den(), -1, unit);
  add_rational(out, unit);
  return out;
}

QSum multiplicative_vector(const Scalar& x, bool* heuristic) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInMultiplicativeSlot, "zero in a multiplicative slot", "0");
  QSum v;
  if (x.is_ratfunc() || x.tower().is_rational()) {
    for (const auto& [s, e] : factor_multiplicative(x).factors) v.add(s, Rational(e));
    return v;
  }
  const TowerElement& t = x.tower();
  const auto support = t.support();
  Integer d = 0;
  int others = 0;
  for (const auto& m : support)
    if (m != 1) {
      d = m;
      ++others;
    }
  const bool quadratic = others == 1;
  if (quadratic) {
    const TowerElement bar = TowerElement(t.coefficient(1)) - TowerElement::sqrt_radicand(d).scaled(t.coefficient(d));
    const TowerElement norm = t * bar;
    add_rational_vector(v, norm.rational_value(), Rational(1, 2));
    if (d < 0) {
      add_imaginary_quadratic(v, t.coefficient(1), t.coefficient(d), d);
      return v;
    }
    const TowerElement u = t * bar.inverse();
    if (u.is_rational()) return v;  // u = -1
    if (heuristic) *heuristic = true;
    const TowerElement w = u.inverse();
    const std::string su = u.to_string();
    const std::string sw = w.to_string();
    if (su < sw)
      v.add("x:" + su, Rational(1, 2));
    else
      v.add("x:" + sw, Rational(-1, 2));
    return v;
  }
  if (heuristic) *heuristic = true;
  v.add("x:" + t.to_string(), 1);
  return v;
}

Scalar symbol_value(const std::string& symbol) {
  if (symbol.size() > 2 && (symbol.rfind("p:", 0) == 0 || symbol.rfind("f:", 0) == 0))
    return parse_expression(symbol.substr(2));
  throw Error(ErrorCode::UnknownGenerator, "no representative for symbol " + symbol, symbol);
}

}  // namespace dehnforge
