#include "dehnforge/relation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "dehnforge/error.hpp"

namespace dehnforge {

namespace {

constexpr int kGuardBits = 64;

int digits_to_bits(int digits) { return static_cast<int>(std::ceil(digits * std::log2(10.0))); }

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Nearest integer to a / b for b > 0.
Integer round_div(const Integer& a, const Integer& b) {
  Integer twice = 2 * a + b;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Integer(2 * b).get_mpz_t());
  return q;
}

Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer scaled_round(const Mpfr& v, int bits) {
  Mpfr t(v.precision() + bits);
  mpfr_mul_2si(t.get(), v.get(), bits, MPFR_RNDN);
  Integer out;
  mpfr_get_z(out.get_mpz_t(), t.get(), MPFR_RNDN);
  return out;
}

// |sum c_i v_i| with all values at `bits` working precision.
Mpfr residual(const std::vector<RealSymbol>& values, const std::vector<Integer>& c, int bits) {
  const auto prec = static_cast<mpfr_prec_t>(bits + kGuardBits);
  Mpfr sum(prec);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (c[i] == 0) continue;
    Mpfr v = values[i].evaluate(prec);
    Mpfr term(prec);
    mpfr_mul_z(term.get(), v.get(), c[i].get_mpz_t(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  mpfr_abs(sum.get(), sum.get(), MPFR_RNDN);
  return sum;
}

double log10_of(const Mpfr& x, int floor_bits) {
  if (mpfr_zero_p(x.get())) return -floor_bits * std::log10(2.0);
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
}

bool below_power_of_two(const Mpfr& x, long exponent) {
  Mpfr bound(64);
  mpfr_set_ui_2exp(bound.get(), 1, exponent, MPFR_RNDN);
  return mpfr_cmp(x.get(), bound.get()) < 0;
}

}  // namespace

RealSymbol pi_symbol() {
  return {"pi", [](mpfr_prec_t bits) {
            Mpfr out(bits);
            mpfr_const_pi(out.get(), MPFR_RNDN);
            return out;
          }};
}

RealSymbol pi_multiple(const Rational& q) {
  return {q.get_str() + "*pi", [q](mpfr_prec_t bits) {
            Mpfr out(bits);
            mpfr_const_pi(out.get(), MPFR_RNDN);
            mpfr_mul_q(out.get(), out.get(), q.get_mpq_t(), MPFR_RNDN);
            return out;
          }};
}

RealSymbol arccos_symbol(const Scalar& x) {
  if (!x.is_tower() || !x.tower().is_real())
    throw Error(ErrorCode::NotRealEmbeddable, "arccos argument " + x.to_string() + " is not real", x.to_string());
  const TowerElement t = x.tower();
  if (real_sign(TowerElement(1) - t) < 0 || real_sign(TowerElement(1) + t) < 0)
    throw Error(ErrorCode::ArgumentOutOfDomain, "arccos argument " + x.to_string() + " outside [-1, 1]",
                x.to_string());
  return {"arccos(" + x.to_string() + ")", [t](mpfr_prec_t bits) {
            // Near +-1 arccos loses half the bits, hence the doubled input precision.
            const Embedded e = embed_float(t, static_cast<int>(2 * bits + kGuardBits));
            Mpfr arg = e.value;
            if (mpfr_cmp_si(arg.get(), 1) > 0) mpfr_set_si(arg.get(), 1, MPFR_RNDN);
            if (mpfr_cmp_si(arg.get(), -1) < 0) mpfr_set_si(arg.get(), -1, MPFR_RNDN);
            Mpfr out(bits);
            mpfr_acos(out.get(), arg.get(), MPFR_RNDN);
            return out;
          }};
}

std::vector<Rational> lll_reduce(std::vector<std::vector<Integer>>& b) {
  const std::size_t n = b.size();
  if (n == 0) return {};
  std::vector<Integer> d(n + 1);
  std::vector<std::vector<Integer>> lam(n, std::vector<Integer>(n));
  d[0] = 1;
  auto gso_row = [&](std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      Integer u = dot(b[k], b[j]);
      for (std::size_t i = 0; i < j; ++i) u = exact_div(d[i + 1] * u - lam[k][i] * lam[j][i], d[i]);
      if (j < k)
        lam[k][j] = u;
      else
        d[k + 1] = u;
    }
    if (d[k + 1] == 0) throw Error(ErrorCode::InvalidInput, "lattice rows are linearly dependent");
  };
  auto red = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam[k][l]) <= d[l + 1]) return;
    const Integer q = round_div(lam[k][l], d[l + 1]);
    for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
    lam[k][l] -= q * d[l + 1];
    for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };
  auto swap = [&](std::size_t k, std::size_t kmax) {
    std::swap(b[k], b[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Integer l = lam[k][k - 1];
    const Integer big = exact_div(d[k - 1] * d[k + 1] + l * l, d[k]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Integer t = lam[i][k];
      lam[i][k] = exact_div(d[k + 1] * lam[i][k - 1] - l * t, d[k]);
      lam[i][k - 1] = exact_div(big * t + l * lam[i][k], d[k + 1]);
    }
    d[k] = big;
  };
  gso_row(0);
  std::size_t k = 1;
  std::size_t kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      gso_row(k);
    }
    red(k, k - 1);
    if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
      swap(k, kmax);
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) red(k, l);
      ++k;
    }
  }
  std::vector<Rational> norms;
  for (std::size_t i = 0; i < n; ++i) {
    Rational r(d[i + 1], d[i]);
    r.canonicalize();
    norms.push_back(r);
  }
  return norms;
}

RelationCertificate find_relation(const RelationQuery& q) {
  const std::size_t n = q.values.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "relation query without values");
  const int bits = digits_to_bits(q.precision_digits);
  if (bits < 128) throw Error(ErrorCode::InvalidInput, "relation search needs at least 128 bits");
  if (q.height_bound < 1) throw Error(ErrorCode::InvalidInput, "height bound must be positive");
  std::set<std::string> seen;
  for (const auto& v : q.values)
    if (!seen.insert(v.name).second) throw Error(ErrorCode::InvalidInput, "repeated value " + v.name, v.name);

  RelationCertificate cert;
  cert.precision_digits = q.precision_digits;
  cert.height_bound = q.height_bound;
  for (const auto& v : q.values) cert.names.push_back(v.name);

  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i][i] = 1;
    rows[i][n] = scaled_round(q.values[i].evaluate(bits + kGuardBits), bits);
  }
  const std::vector<Rational> gs = lll_reduce(rows);

  for (const auto& r : rows) {
    std::vector<Integer> c(r.begin(), r.begin() + static_cast<long>(n));
    bool small = true;
    for (const auto& x : c) small = small && abs(x) <= q.height_bound;
    if (!small) continue;
    if (!below_power_of_two(residual(q.values, c, bits), -bits / 2)) continue;
    // Normalize the sign so the first nonzero coefficient is positive.
    for (const auto& x : c)
      if (x != 0) {
        if (x < 0)
          for (auto& y : c) y = -y;
        break;
      }
    const Mpfr again = residual(q.values, c, 2 * bits);
    if (!below_power_of_two(again, -bits / 2))
      throw Error(ErrorCode::InsufficientPrecision, "candidate relation does not survive doubled precision");
    cert.outcome = RelationOutcome::RelationFound;
    cert.coefficients = std::move(c);
    cert.residual_log10 = log10_of(again, 2 * bits);
    return cert;
  }

  // Every lattice vector is at least as long as the shortest Gram-Schmidt
  // vector. A relation of height H gives a vector of length at most
  // H * sqrt(n + n^2), since each rounded entry is off by at most 1/2.
  Rational min_gs = gs.front();
  for (const auto& g : gs) min_gs = std::min(min_gs, g);
  const Rational hh = Rational(q.height_bound * q.height_bound);
  const Rational bound = hh * static_cast<long>(n + n * n);
  if (min_gs <= bound)
    throw Error(ErrorCode::InsufficientPrecision,
                "lattice cannot exclude relations up to height " + q.height_bound.get_str());
  // Lower bound on |sum c_i v_i| over all nonzero c of height <= H.
  const Rational last_sq = min_gs - hh * static_cast<long>(n);
  Mpfr lb(128);
  mpfr_set_q(lb.get(), last_sq.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(lb.get(), lb.get(), MPFR_RNDD);
  Mpfr slack(128);
  mpfr_set_z(slack.get(), Integer(q.height_bound * static_cast<long>(n)).get_mpz_t(), MPFR_RNDU);
  mpfr_div_2ui(slack.get(), slack.get(), 1, MPFR_RNDU);
  mpfr_sub(lb.get(), lb.get(), slack.get(), MPFR_RNDD);
  mpfr_div_2si(lb.get(), lb.get(), bits, MPFR_RNDD);
  cert.outcome = RelationOutcome::NoRelationUpToHeight;
  cert.residual_log10 = log10_of(lb, bits);
  return cert;
}

std::string RelationCertificate::to_string() const {
  std::ostringstream os;
  if (outcome == RelationOutcome::RelationFound) {
    os << "relation found:";
    for (std::size_t i = 0; i < coefficients.size(); ++i) os << " " << coefficients[i] << "*" << names[i];
    os << " = 0 (residual 1e" << residual_log10 << ")";
  } else {
    os << "no integer relation among";
    for (const auto& n : names) os << " " << n;
    os << " up to height " << height_bound << " (|sum| >= 1e" << residual_log10 << ")";
  }
  os << " at " << precision_digits << " digits; heuristic";
  return os.str();
}

NormalizedAngles angle_lattice_normalize(const std::vector<LengthAngle>& pairs, int precision_digits,
                                         const Integer& height_bound) {
  NormalizedAngles out;
  // Exact merge on the symbol name first.
  std::vector<LengthAngle> merged;
  for (const auto& p : pairs) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const LengthAngle& m) { return m.angle.name == p.angle.name; });
    if (it == merged.end())
      merged.push_back(p);
    else
      it->length += p.length;
  }
  const RealSymbol pi = pi_symbol();
  std::vector<LengthAngle>& basis = out.pairs;
  for (const auto& p : merged) {
    if (p.length.is_zero()) continue;
    RelationQuery q;
    q.precision_digits = precision_digits;
    q.height_bound = height_bound;
    q.values = {p.angle, pi};
    for (const auto& b : basis) q.values.push_back(b.angle);
    RelationCertificate c = find_relation(q);
    if (c.outcome == RelationOutcome::NoRelationUpToHeight) {
      basis.push_back(p);
      continue;
    }
    const Integer& lead = c.coefficients[0];
    if (lead == 0)
      throw Error(ErrorCode::InsufficientPrecision, "relation among angles already certified independent");
    // lead * theta = -sum c_j b_j modulo pi Q.
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Integer& cj = c.coefficients[j + 2];
      if (cj == 0) continue;
      Rational f(-cj, lead);
      f.canonicalize();
      basis[j].length += p.length * Scalar(f);
    }
    out.relations_found.push_back(std::move(c));
  }
  std::erase_if(basis, [](const LengthAngle& b) { return b.length.is_zero(); });
  RelationQuery final_q;
  final_q.precision_digits = precision_digits;
  final_q.height_bound = height_bound;
  for (const auto& b : basis) final_q.values.push_back(b.angle);
  final_q.values.push_back(pi);
  out.basis_certificate = find_relation(final_q);
  if (out.basis_certificate.outcome == RelationOutcome::RelationFound)
    throw Error(ErrorCode::InsufficientPrecision, "normalized angle basis is not relation-free");
  return out;
}

}  // namespace dehnforge
