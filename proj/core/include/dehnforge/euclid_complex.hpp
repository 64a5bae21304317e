#pragma once

#include <vector>

#include "dehnforge/dehn.hpp"
#include "dehnforge/weight_complex.hpp"

namespace dehnforge {

inline constexpr std::size_t kDefaultEuclidCap = 200000;

// Reduced Euclidean Dehn complex of weight 2 or 3 over Q, on the truncation
// spanned by the generators and the constituents D^E produces from them.
//   n = 2:  E_2 -> E_1 (x) S_1
//   n = 3:  E_3 -> E_2 (x) S_1  +  E_1 (x) Q_2 -> E_1 (x) Lambda^2 S_1
// E_1 = F is written on the surd basis "E1:<m>", S_1 = F* (x) Q on factor
// symbols, Q_2 on indecomposable S_2 keys.
// Keys: degree 1 the E_n key; then "<wedge of S keys>|<E key>".
WeightComplex<Rational> build_euclidean_dehn_complex(int n, const std::vector<PointSimplex>& gens,
                                                     std::size_t cap = kDefaultEuclidCap);

// Builds the Q_eps Lie coalgebra of the same truncation (L0 = S_1 + Q_2,
// L1 = E_1 + E_2 + E_3), takes the eps-part of its weight-n cochain complex
// and compares it with the Euclidean Dehn complex generator by generator:
// every Euclidean generator must be an eps-part generator of the same degree
// and the two differentials must agree on it.
CheckResult eps_part_agreement(int n, const std::vector<PointSimplex>& gens);

}  // namespace dehnforge
