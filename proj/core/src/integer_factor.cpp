#include "dehnforge/integer_factor.hpp"

#include <stdexcept>
#include <unordered_map>

#include "dehnforge/error.hpp"

namespace dehnforge {

namespace {

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Integer, int> factor_integer(const Integer& n_in) {
  if (n_in == 0) throw Error(ErrorCode::ZeroElement, "cannot factor 0");
  thread_local std::unordered_map<std::string, std::map<Integer, int>> cache;
  Integer n = abs(n_in);
  const std::string key = n.get_str(16);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::map<Integer, int> out;
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Integer(p)] += 1;
      n /= p;
    }
  }
  // wheel 30 trial division to 10^5
  static const unsigned long inc[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  unsigned long p = 7;
  for (int i = 0; p <= 100000 && Integer(p) * p <= n; p += inc[i++ & 7]) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Integer(p)] += 1;
      n /= p;
    }
  }
  if (n > 1) {
    if (Integer(p) * p > n)
      out[n] += 1;
    else
      factor_into(n, out);
  }
  if (cache.size() > 200000) cache.clear();
  cache.emplace(key, out);
  return out;
}

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n == 0) throw Error(ErrorCode::ZeroElement, "squarefree part of 0");
  SquarefreeSplit s;
  s.sign = sgn(n) < 0 ? -1 : 1;
  for (const auto& [p, e] : factor_integer(n)) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e / 2));
    s.square *= pk;
    if (e % 2) s.core *= p;
  }
  return s;
}

int valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw Error(ErrorCode::ZeroElement, "valuation of 0");
  int v = 0;
  Integer m = n;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

namespace {

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer tonelli_shanks(const Integer& a_in, const Integer& p) {
  Integer a = mod(a_in, p);
  if (p == 2) return a;
  Integer q = p - 1;
  int s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Integer c = powmod(z, q, p);
  Integer r = powmod(a, (q + 1) / 2, p);
  Integer t = powmod(a, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Integer b = c;
    for (int j = 0; j < m - i - 1; ++j) b = b * b % p;
    r = r * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return r;
}

}  // namespace

Integer padic_sqrt(const Integer& a, const Integer& p, int k) {
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
  if (p == 2) {
    if (mod(a, 8) != 1) throw Error(ErrorCode::InvalidInput, "2-adic sqrt needs a = 1 mod 8");
    Integer x = 1;
    Integer two_j = 8;  // 2^j
    for (int j = 3; j <= k + 1; ++j) {
      if (mod(x * x - a, two_j * 2) != 0) x += two_j / 2;
      two_j *= 2;
    }
    return mod(x, pk);
  }
  if (mpz_legendre(mod(a, p).get_mpz_t(), p.get_mpz_t()) != 1)
    throw Error(ErrorCode::InvalidInput, "not a nonzero square mod p");
  Integer r = tonelli_shanks(a, p);
  if (r > (p - 1) / 2) r = p - r;
  Integer cur = p;
  while (cur < pk) {
    cur *= cur;
    if (cur > pk) cur = pk;
    Integer inv;
    Integer two_r = 2 * r;
    mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), cur.get_mpz_t());
    r = mod(r - (r * r - a) * inv, cur);
  }
  return mod(r, pk);
}

bool splits_in_quadratic(const Integer& d, const Integer& p) {
  if (p == 2) return mod(d, 8) == 1;
  if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) return false;
  return mpz_legendre(mod(d, p).get_mpz_t(), p.get_mpz_t()) == 1;
}

}  // namespace dehnforge
