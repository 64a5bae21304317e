#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dehnforge/formal_sum.hpp"
#include "dehnforge/scalar.hpp"

namespace dehnforge {

// x = unit * prod symbol^exponent. Symbols are "p:<prime>" for rational
// primes and "f:<monic irreducible>" for polynomials. The unit is a rational
// number only for function-field input with trivial content, and is +-1
// otherwise.
struct MultiplicativeFactorization {
  int sign = 1;
  std::vector<std::pair<std::string, long>> factors;
};

// Unique factorization in Q* or Q(t...)*. Tower elements that are not rational
// raise UnsupportedField; zero raises ZeroElement.
MultiplicativeFactorization factor_multiplicative(const Scalar& x);

// Image of x in F* (x) Q on the canonical generator basis. Torsion maps to 0.
// Imaginary quadratic elements use split-prime symbols "q:<d>:<p>"; other
// tower elements fall back to an opaque symbol "x:<element>" and set
// *heuristic. Zero raises ZeroInMultiplicativeSlot.
QSum multiplicative_vector(const Scalar& x, bool* heuristic = nullptr);

// Rebuilds a representative element for a "p:" or "f:" symbol.
Scalar symbol_value(const std::string& symbol);

}  // namespace dehnforge
