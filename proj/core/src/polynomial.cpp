#include "dehnforge/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>

#include "dehnforge/error.hpp"

namespace dehnforge {

std::string variable_name(int index) {
  if (index == 0) return "t";
  return "t" + std::to_string(index);
}

int variable_index(const std::string& name) {
  if (name == "t") return 0;
  if (name.size() == 2 && name[0] == 't' && name[1] >= '1' && name[1] <= '9') return name[1] - '0';
  return -1;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  return m;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::variable(int index) {
  Monomial m;
  m.exp[index] = 1;
  return monomial(m, 1);
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m.exp[var]);
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::uint16_t Poly::used_variables() const {
  std::uint16_t mask = 0;
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (m.exp[i]) mask |= static_cast<std::uint16_t>(1u << i);
  return mask;
}

int Poly::num_variables() const { return std::popcount(used_variables()); }

int Poly::single_variable() const {
  auto mask = used_variables();
  if (std::popcount(mask) != 1) return -1;
  return std::countr_zero(mask);
}

Poly Poly::coefficient_in(int var, int k) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] != k) continue;
    Monomial r = m;
    r.exp[var] = 0;
    out.add_term(r, c);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

bool operator<(const Poly& a, const Poly& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly p = *this;
  for (auto& [m, v] : p.terms_) v *= c;
  return p;
}

Poly Poly::pow(unsigned k) const {
  Poly r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

Poly Poly::derivative(int var) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] == 0) continue;
    Monomial r = m;
    r.exp[var] -= 1;
    out.add_term(r, c * m.exp[var]);
  }
  return out;
}

Rational Poly::evaluate(const std::array<Rational, kMaxVars>& point) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kMaxVars; ++i)
      for (int e = 0; e < m.exp[i]; ++e) t *= point[i];
    s += t;
  }
  return s;
}

Rational Poly::make_monic() {
  if (is_zero()) return 1;
  Rational lc = leading_coefficient();
  if (lc != 1)
    for (auto& [m, c] : terms_) c /= lc;
  return lc;
}

Poly Poly::monic() const {
  Poly p = *this;
  p.make_monic();
  return p;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    bool is_one = m == Monomial{};
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool printed = false;
    if (a != 1 || is_one) {
      os << a.get_str();
      printed = true;
    }
    for (int i = 0; i < kMaxVars; ++i) {
      if (!m.exp[i]) continue;
      if (printed) os << "*";
      os << variable_name(i);
      if (m.exp[i] > 1) os << "^" << m.exp[i];
      printed = true;
    }
  }
  return os.str();
}

Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  Poly q, r = a;
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial lr = r.leading_monomial();
    if (!lb.divides(lr)) throw Error(ErrorCode::InvalidInput, "inexact polynomial division");
    Poly t = Poly::monomial(lr / lb, r.leading_coefficient() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

std::pair<Poly, Poly> univariate_divmod(const Poly& a, const Poly& b, int var) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  Poly q, r = a;
  const int db = b.degree_in(var);
  const Rational lb = b.coefficient_in(var, db).constant_value();
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    Monomial m;
    m.exp[var] = static_cast<std::uint16_t>(dr - db);
    Poly t = Poly::monomial(m, r.coefficient_in(var, dr).constant_value() / lb);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

namespace {

Poly univariate_gcd(Poly a, Poly b, int var) {
  while (!b.is_zero()) {
    Poly r = univariate_divmod(a, b, var).second;
    a = std::move(b);
    b = std::move(r);
    b.make_monic();
  }
  a.make_monic();
  return a;
}

Poly gcd_impl(const Poly& a, const Poly& b);

// gcd of the coefficients of p viewed as a polynomial in var.
Poly content_in(const Poly& p, int var) {
  Poly g;
  for (int k = p.degree_in(var); k >= 0; --k) {
    Poly c = p.coefficient_in(var, k);
    if (c.is_zero()) continue;
    g = gcd_impl(g, c);
    if (g.is_constant() && !g.is_zero()) return Poly(1);
  }
  return g;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, int var) {
  const int db = b.degree_in(var);
  const Poly lb = b.leading_in(var);
  Poly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    Monomial m;
    m.exp[var] = static_cast<std::uint16_t>(dr - db);
    r = lb * r - r.leading_in(var) * Poly::monomial(m, 1) * b;
  }
  return r;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const std::uint16_t mask = a.used_variables() | b.used_variables();
  if (mask == 0) return Poly(1);
  if (std::popcount(mask) == 1) return univariate_gcd(a, b, std::countr_zero(mask));
  const int var = std::countr_zero(mask);
  const bool in_a = a.degree_in(var) > 0, in_b = b.degree_in(var) > 0;
  if (!in_a) return gcd_impl(a, content_in(b, var));
  if (!in_b) return gcd_impl(content_in(a, var), b);
  Poly ca = content_in(a, var), cb = content_in(b, var);
  Poly c = gcd_impl(ca, cb);
  Poly pa = exact_divide(a, ca), pb = exact_divide(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = pseudo_remainder(pa, pb, var);
    pa = std::move(pb);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      pa = Poly(1);
      break;
    }
    pb = exact_divide(r, content_in(r, var));
    pb.make_monic();
  }
  Poly g = exact_divide(pa, content_in(pa, var));
  return (c * g).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return gcd_impl(a, b);
}

namespace {

// Clears denominators and rational content: p = scale * q with q integral primitive.
Poly integer_primitive(const Poly& p, Rational* scale = nullptr) {
  Integer l = 1, g = 0;
  for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : p.terms()) {
    Integer v = Integer(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational s(g, l);
  s.canonicalize();
  if (scale) *scale = s;
  return p.scaled(1 / s);
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> ds{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = ds.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

// Lagrange interpolation through (x_i, y_i), univariate in var.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys, int var) {
  Poly result;
  const Poly x = Poly::variable(var);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly term(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      term = term * (x - Poly(xs[j])).scaled(1 / (xs[i] - xs[j]));
    }
    result += term;
  }
  return result;
}

bool is_integral(const Poly& p) {
  for (const auto& [m, c] : p.terms())
    if (c.get_den() != 1) return false;
  return true;
}

// Finds a factor of degree exactly d of the integral squarefree polynomial f
// by Kronecker's method; returns zero poly if none.
Poly kronecker_factor(const Poly& f, int var, int d) {
  std::vector<Rational> xs;
  std::vector<std::vector<Integer>> choices;
  std::array<Rational, kMaxVars> pt{};
  std::size_t combos = 1;
  for (long k = 0; static_cast<int>(xs.size()) <= d; ++k) {
    const long x = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    pt[var] = x;
    Rational v = f.evaluate(pt);
    if (v == 0) continue;  // squarefree f with no rational roots never hits this
    xs.emplace_back(x);
    std::vector<Integer> ds;
    for (const auto& dv : divisors(v.get_num())) {
      ds.push_back(dv);
      ds.push_back(-dv);
    }
    combos *= ds.size();
    if (combos > 2'000'000)
      throw Error(ErrorCode::UnsupportedField, "Kronecker factor search too large for " + f.to_string());
    choices.push_back(std::move(ds));
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<Rational> ys(choices.size());
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) ys[i] = choices[i][idx[i]];
    Poly g = interpolate(xs, ys, var);
    if (g.degree_in(var) == d && is_integral(g)) {
      auto [q, r] = univariate_divmod(f, g, var);
      if (r.is_zero()) return g;
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return {};
}

void univariate_irreducible(const Poly& f_in, int var, std::vector<Poly>& out) {
  Poly f = integer_primitive(f_in);
  const int deg = f.degree_in(var);
  if (deg <= 1) {
    out.push_back(f.monic());
    return;
  }
  // rational roots
  const Integer a0 = [&] {
    // strip factors of var first
    return f.coefficient_in(var, 0).constant_value().get_num();
  }();
  if (a0 == 0) {
    out.push_back(Poly::variable(var));
    univariate_irreducible(exact_divide(f, Poly::variable(var)), var, out);
    return;
  }
  const Integer an = f.coefficient_in(var, deg).constant_value().get_num();
  std::array<Rational, kMaxVars> pt{};
  for (const auto& p : divisors(a0)) {
    for (const auto& q : divisors(an)) {
      for (int s : {1, -1}) {
        Rational r(s * p, q);
        r.canonicalize();
        pt[var] = r;
        if (f.evaluate(pt) == 0) {
          Poly lin = Poly::variable(var) - Poly(r);
          out.push_back(lin);
          univariate_irreducible(univariate_divmod(f, lin, var).first, var, out);
          return;
        }
      }
    }
  }
  if (deg <= 3) {
    out.push_back(f.monic());
    return;
  }
  for (int d = 2; d <= deg / 2; ++d) {
    Poly g = kronecker_factor(f, var, d);
    if (!g.is_zero()) {
      univariate_irreducible(g, var, out);
      univariate_irreducible(univariate_divmod(f, g, var).first, var, out);
      return;
    }
  }
  out.push_back(f.monic());
}

// Splits a squarefree polynomial into irreducibles.
void irreducible_split(const Poly& f, std::vector<Poly>& out) {
  if (f.is_constant()) return;
  const int uv = f.single_variable();
  if (uv >= 0) {
    univariate_irreducible(f, uv, out);
    return;
  }
  for (int var = 0; var < kMaxVars; ++var) {
    if (f.degree_in(var) != 1) continue;
    Poly c = content_in(f, var);
    if (c.is_constant()) {
      out.push_back(f.monic());
      return;
    }
    irreducible_split(c, out);
    irreducible_split(exact_divide(f, c), out);
    return;
  }
  // not linear in any variable: peel contents, then give up
  for (int var = 0; var < kMaxVars; ++var) {
    if (f.degree_in(var) == 0) continue;
    Poly c = content_in(f, var);
    if (!c.is_constant()) {
      irreducible_split(c, out);
      irreducible_split(exact_divide(f, c), out);
      return;
    }
  }
  throw Error(ErrorCode::UnsupportedField,
              "multivariate factorization of " + f.to_string() + " is outside the certified cases");
}

}  // namespace

PolyFactorization factor_poly(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroElement, "cannot factor the zero polynomial");
  PolyFactorization result;
  Poly f = p;
  result.unit = f.make_monic();
  std::map<Poly, int> mult;
  // Yun squarefree decomposition with respect to each variable in turn.
  std::function<void(const Poly&, int)> yun = [&](const Poly& g, int exponent) {
    if (g.is_constant()) return;
    const int var = std::countr_zero(g.used_variables());
    Poly cont = content_in(g, var);
    if (!cont.is_constant()) {
      yun(cont.monic(), exponent);
    }
    Poly a = exact_divide(g, cont).monic();
    Poly da = a.derivative(var);
    Poly b = gcd(a, da);
    Poly c = exact_divide(a, b);
    Poly d = exact_divide(da, b) - c.derivative(var);
    for (int i = 1; !c.is_constant(); ++i) {
      Poly h = gcd(c, d);
      if (!h.is_constant()) {
        std::vector<Poly> irr;
        irreducible_split(h, irr);
        for (auto& q : irr) mult[q.monic()] += i * exponent;
      }
      c = exact_divide(c, h);
      d = exact_divide(d, h) - c.derivative(var);
    }
  };
  yun(f, 1);
  for (auto& [q, e] : mult) result.factors.emplace_back(q, e);
  // Reconcile leading coefficients: product of monic factors is monic, so the
  // unit is exact.
  return result;
}

}  // namespace dehnforge
