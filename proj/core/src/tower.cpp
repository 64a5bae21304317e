#include "dehnforge/tower.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dehnforge/embed.hpp"
#include "dehnforge/error.hpp"

namespace dehnforge {

RadicandProduct multiply_radicands(const Integer& m1, const Integer& m2) {
  Integer a = abs(m1), b = abs(m2), g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer core = (a / g) * (b / g);
  const bool n1 = m1 < 0, n2 = m2 < 0;
  RadicandProduct r{Rational(g), core};
  if (n1 && n2) r.scalar = -r.scalar;
  if (n1 != n2) r.radicand = -core;
  return r;
}

Integer signed_core(const Rational& r) {
  if (r == 0) throw Error(ErrorCode::ZeroElement, "core of zero");
  // r = n/d = n*d / d^2
  Integer nd = r.get_num() * r.get_den();
  auto s = squarefree_split(nd);
  return s.sign < 0 ? Integer(-s.core) : s.core;
}

TowerElement::TowerElement(const Rational& c) {
  if (c != 0) coords_.emplace(Integer(1), c);
}

TowerElement TowerElement::sqrt_radicand(const Integer& m) {
  TowerElement x;
  x.coords_.emplace(m, Rational(1));
  return x;
}

TowerElement TowerElement::sqrt_rational(const Rational& r) {
  if (r == 0) return {};
  Integer nd = r.get_num() * r.get_den();
  auto s = squarefree_split(nd);
  Rational a(s.square, r.get_den());
  a.canonicalize();
  TowerElement x;
  x.coords_.emplace(s.sign < 0 ? Integer(-s.core) : s.core, a);
  return x;
}

void TowerElement::add(const Integer& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coords_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords_.erase(it);
  }
}

bool TowerElement::is_rational() const {
  return coords_.empty() || (coords_.size() == 1 && coords_.begin()->first == 1);
}

Rational TowerElement::rational_value() const {
  if (coords_.empty()) return 0;
  return coords_.begin()->second;
}

bool TowerElement::is_real() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const auto& kv) { return kv.first > 0; });
}

std::vector<Integer> TowerElement::support() const {
  std::vector<Integer> s;
  for (const auto& [m, c] : coords_) s.push_back(m);
  return s;
}

Rational TowerElement::coefficient(const Integer& m) const {
  auto it = coords_.find(m);
  return it == coords_.end() ? Rational(0) : it->second;
}

TowerElement TowerElement::operator-() const {
  TowerElement r = *this;
  for (auto& [m, c] : r.coords_) c = -c;
  return r;
}

TowerElement& TowerElement::operator+=(const TowerElement& o) {
  for (const auto& [m, c] : o.coords_) add(m, c);
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& o) {
  for (const auto& [m, c] : o.coords_) add(m, -c);
  return *this;
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  if (a.is_rational()) return b.scaled(a.rational_value());
  if (b.is_rational()) return a.scaled(b.rational_value());
  TowerElement r;
  for (const auto& [m1, c1] : a.coords_)
    for (const auto& [m2, c2] : b.coords_) {
      auto p = multiply_radicands(m1, m2);
      r.add(p.radicand, c1 * c2 * p.scalar);
    }
  return r;
}

TowerElement& TowerElement::operator*=(const TowerElement& o) { return *this = *this * o; }

TowerElement TowerElement::scaled(const Rational& c) const {
  if (c == 0) return {};
  TowerElement r = *this;
  for (auto& [m, v] : r.coords_) v *= c;
  return r;
}

TowerElement TowerElement::conjugate() const {
  TowerElement r = *this;
  for (auto& [m, c] : r.coords_)
    if (m < 0) c = -c;
  return r;
}

bool operator<(const TowerElement& a, const TowerElement& b) {
  return std::lexicographical_compare(
      a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

namespace {

// Closure of a set of radicands under multiplication (modulo squares).
std::vector<Integer> radicand_closure(const std::vector<Integer>& gens) {
  std::set<Integer> seen{Integer(1)};
  std::vector<Integer> out{Integer(1)};
  for (const auto& g : gens) {
    if (seen.count(g)) continue;
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      Integer m = multiply_radicands(out[i], g).radicand;
      if (seen.insert(m).second) out.push_back(m);
    }
  }
  return out;
}

std::vector<Rational> solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::DivisionByZero, "singular multiplication matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

TowerElement TowerElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero tower element");
  if (is_rational()) return TowerElement(1 / rational_value());
  if (coords_.size() <= 2 && coords_.begin()->first == 1) {
    // a + b sqrt(m)
    auto it = std::next(coords_.begin());
    const Integer& m = it->first;
    Rational a = coords_.begin()->second, b = it->second;
    Rational n = a * a - Rational(m) * b * b;
    TowerElement r(a / n);
    r.add(m, -b / n);
    return r;
  }
  if (coords_.size() == 1) {
    // c sqrt(m): inverse is sqrt(m) / (c m)
    const auto& [m, c] = *coords_.begin();
    TowerElement r;
    r.add(m, 1 / (c * Rational(m)));
    return r;
  }
  const std::vector<Integer> basis = radicand_closure(support());
  std::map<Integer, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  const std::size_t n = basis.size();
  std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    TowerElement col = *this * sqrt_radicand(basis[j]);
    for (const auto& [m, c] : col.coords_) mat[index.at(m)][j] = c;
  }
  std::vector<Rational> rhs(n);
  rhs[index.at(Integer(1))] = 1;
  auto sol = solve_dense(std::move(mat), std::move(rhs));
  TowerElement r;
  for (std::size_t j = 0; j < n; ++j) r.add(basis[j], sol[j]);
  return r;
}

TowerElement& TowerElement::operator/=(const TowerElement& o) { return *this = *this * o.inverse(); }

std::string TowerElement::to_string() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : coords_) {
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (m == 1) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "sqrt(" << m.get_str() << ")";
    }
  }
  return os.str();
}

namespace {

// GF(2) bookkeeping for radicands: exponent vectors over primes and sign.
class RadicandBasis {
 public:
  explicit RadicandBasis(const std::vector<Integer>& radicands) {
    for (const auto& m : radicands) {
      if (m == 1) continue;
      auto [bits, combo] = reduce(m);
      if (bits.empty()) continue;
      combo.insert(gens_.size());
      gens_.push_back(m);
      Row row{std::move(bits), std::move(combo)};
      auto pos = std::find_if(rows_.begin(), rows_.end(),
                              [&](const Row& r) { return *row.bits.begin() < *r.bits.begin(); });
      rows_.insert(pos, std::move(row));
    }
  }

  const std::vector<Integer>& gens() const { return gens_; }

  // Indices of generators whose product equals m modulo squares.
  std::set<std::size_t> decompose(const Integer& m) const {
    auto [bits, combo] = reduce(m);
    if (!bits.empty()) throw Error(ErrorCode::InvalidInput, "radicand outside the field");
    return combo;
  }

 private:
  using Bits = std::set<Integer>;  // primes with odd exponent; -1 encodes sign
  struct Row {
    Bits bits;
    std::set<std::size_t> combo;
  };

  static Bits bits_of(const Integer& m) {
    Bits b;
    if (m < 0) b.insert(Integer(-1));
    for (const auto& [p, e] : factor_integer(abs(m)))
      if (e % 2) b.insert(p);
    return b;
  }

  static void xor_into(Bits& a, const Bits& b) {
    for (const auto& x : b)
      if (!a.erase(x)) a.insert(x);
  }
  static void xor_into(std::set<std::size_t>& a, const std::set<std::size_t>& b) {
    for (auto x : b)
      if (!a.erase(x)) a.insert(x);
  }

  std::pair<Bits, std::set<std::size_t>> reduce(const Integer& m) const {
    Bits bits = bits_of(m);
    std::set<std::size_t> combo;
    for (const auto& row : rows_) {
      if (bits.count(*row.bits.begin())) {
        xor_into(bits, row.bits);
        xor_into(combo, row.combo);
      }
    }
    return {bits, combo};
  }

  // Rows sorted by their smallest element, which acts as the pivot.
  std::vector<Integer> gens_;
  std::vector<Row> rows_;
};

std::optional<TowerElement> sqrt_rec(const TowerElement& x, const RadicandBasis& basis, std::size_t r) {
  if (x.is_zero()) return TowerElement();
  if (r == 0) {
    if (!x.is_rational()) return std::nullopt;
    Rational q = x.rational_value();
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
      return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return TowerElement(Rational(n, d));
  }
  const std::size_t k = r - 1;
  const Integer& g = basis.gens()[k];
  TowerElement sigma;
  for (const auto& [m, c] : x.coords()) {
    const bool odd = basis.decompose(m).count(k) > 0;
    sigma += TowerElement::sqrt_radicand(m).scaled(odd ? -c : c);
  }
  TowerElement a = (x + sigma).scaled(Rational(1, 2));
  TowerElement bg = (x - sigma).scaled(Rational(1, 2));
  TowerElement sg = TowerElement::sqrt_radicand(g);
  TowerElement b = (bg * sg).scaled(1 / Rational(g));
  if (b.is_zero()) {
    if (auto s = sqrt_rec(a, basis, k)) return s;
    if (auto s = sqrt_rec(a.scaled(1 / Rational(g)), basis, k)) return *s * sg;
    return std::nullopt;
  }
  TowerElement norm = a * a - (b * b).scaled(Rational(g));
  auto n = sqrt_rec(norm, basis, k);
  if (!n) return std::nullopt;
  for (int sign : {1, -1}) {
    TowerElement z = (a + n->scaled(sign)).scaled(Rational(1, 2));
    auto alpha = sqrt_rec(z, basis, k);
    if (!alpha || alpha->is_zero()) continue;
    TowerElement beta = b / alpha->scaled(2);
    TowerElement y = *alpha + beta * sg;
    if (y * y == x) return y;
  }
  return std::nullopt;
}

}  // namespace

std::optional<TowerElement> sqrt_in_field(const TowerElement& x, const std::vector<Integer>& radicands) {
  std::vector<Integer> all = radicands;
  for (const auto& m : x.support()) all.push_back(m);
  RadicandBasis basis(all);
  auto y = sqrt_rec(x, basis, basis.gens().size());
  if (!y) return std::nullopt;
  // Prefer the root that is positive in the real embedding when available.
  if (y->is_real() && !y->is_zero() && real_sign(*y) < 0) y = -*y;
  return y;
}

bool TowerField::is_real() const {
  return std::all_of(adjunctions_.begin(), adjunctions_.end(), [](const Integer& m) { return m > 0; });
}

bool TowerField::contains(const TowerElement& x) const {
  RadicandBasis basis(adjunctions_);
  for (const auto& m : x.support()) {
    try {
      basis.decompose(m);
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

std::string TowerField::to_string() const {
  if (adjunctions_.empty()) return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < adjunctions_.size(); ++i) {
    if (i) s += ", ";
    s += "sqrt(" + adjunctions_[i].get_str() + ")";
  }
  return s + ")";
}

Adjunction adjoin_sqrt(const TowerField& f, const TowerElement& d, bool allow_imaginary) {
  if (!f.contains(d)) throw Error(ErrorCode::FieldMismatch, "radicand " + d.to_string() + " not in " + f.to_string());
  if (d.is_zero()) return {f, TowerElement(), TowerElement()};
  const bool negative = d.is_real() ? real_sign(d) < 0 : false;
  if (!d.is_real() && !allow_imaginary)
    throw Error(ErrorCode::NotRealEmbeddable, "radicand " + d.to_string() + " is not real");
  if (negative && !allow_imaginary)
    throw Error(ErrorCode::NegativeRadicand, "sqrt of " + d.to_string() + " has no real value");
  if (auto y = sqrt_in_field(d, f.adjunctions())) {
    if (f.contains(*y)) return {f, *y, *y};
  }
  if (!d.is_rational())
    throw Error(ErrorCode::UnsupportedRadicand,
                "nested radical sqrt(" + d.to_string() + ") lies outside the multiquadratic tower");
  std::vector<Integer> adj = f.adjunctions();
  adj.push_back(signed_core(d.rational_value()));
  TowerField g(std::move(adj));
  return {g, std::nullopt, TowerElement::sqrt_rational(d.rational_value())};
}

}  // namespace dehnforge
