#pragma once

#include <vector>

#include "dehnforge/dehn.hpp"
#include "dehnforge/relation.hpp"

namespace dehnforge {

// One aggregated edge class: multiplicity * length (x) arccos(cos_arg).
struct ClassicalPair {
  Scalar length;
  Scalar cos_arg;
  Rational multiplicity;
};

struct ClassicalDehnValue {
  std::vector<ClassicalPair> pairs;
  NormalizedAngles normalized;

  bool is_zero() const { return normalized.pairs.empty(); }
  std::string to_string() const;
};

// Interior dihedral angle at edge (i, j) of a tetrahedron, as an exact cosine.
Scalar dihedral_cos(const PointSimplex& tetra, int i, int j);

// Sum over simplices and edges of length (x) dihedral angle in R (x) R/piQ.
// Each simplex counts with its multiplicity times the sign of its volume.
// Needs a positive definite form over a real tower (NotRealEmbeddable).
ClassicalDehnValue classical_dehn_3d(const EnChain& polytope, int precision_digits = kDefaultPrecisionDigits,
                                     const Integer& height_bound = kDefaultHeightBound);

}  // namespace dehnforge
