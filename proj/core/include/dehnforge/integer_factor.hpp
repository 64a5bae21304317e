#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace dehnforge {

using Rational = mpq_class;
using Integer = mpz_class;

// Prime factorization of |n|, n != 0. Trial division followed by Pollard rho.
// Results are memoized; the cache is thread-local.
std::map<Integer, int> factor_integer(const Integer& n);

// Writes n = sign * square^2 * core with core squarefree and positive.
struct SquarefreeSplit {
  int sign = 1;
  Integer square = 1;
  Integer core = 1;
};
SquarefreeSplit squarefree_split(const Integer& n);

// p-adic valuation of a nonzero integer.
int valuation(const Integer& n, const Integer& p);

// Square root of a modulo p^k for p prime, with a a unit square mod p
// (or a = 1 mod 8 when p = 2). Returns the root congruent to the canonical
// residue: smallest representative mod p for odd p, 1 mod 4 for p = 2.
Integer padic_sqrt(const Integer& a, const Integer& p, int k);

// Legendre-type test for whether p splits in Q(sqrt(d)), d squarefree, d != 1.
bool splits_in_quadratic(const Integer& d, const Integer& p);

}  // namespace dehnforge
