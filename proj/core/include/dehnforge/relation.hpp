#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dehnforge/embed.hpp"
#include "dehnforge/scalar.hpp"

namespace dehnforge {

// A real number known by name and by an evaluator at any precision.
struct RealSymbol {
  std::string name;
  std::function<Mpfr(mpfr_prec_t)> evaluate;
};

RealSymbol pi_symbol();
// arccos of a real tower element in [-1, 1]; ArgumentOutOfDomain otherwise.
RealSymbol arccos_symbol(const Scalar& x);
// A rational multiple of pi, named "p/q*pi".
RealSymbol pi_multiple(const Rational& q);

inline constexpr int kDefaultPrecisionDigits = 200;
inline constexpr long kDefaultHeightBound = 1000000;

struct RelationQuery {
  std::vector<RealSymbol> values;
  int precision_digits = kDefaultPrecisionDigits;
  Integer height_bound = kDefaultHeightBound;
};

enum class RelationOutcome { RelationFound, NoRelationUpToHeight };

struct RelationCertificate {
  RelationOutcome outcome = RelationOutcome::NoRelationUpToHeight;
  std::vector<Integer> coefficients;  // sum c_i v_i = 0, when found
  std::vector<std::string> names;
  double residual_log10 = 0;
  int precision_digits = 0;
  Integer height_bound;

  std::string to_string() const;
};

// LLL search for c with |c_i| <= height and |sum c_i v_i| tiny. A candidate
// must survive re-evaluation at doubled precision; a lattice too coarse to
// exclude relations up to the height raises InsufficientPrecision.
RelationCertificate find_relation(const RelationQuery& q);

// Integral LLL (delta = 3/4) on linearly independent rows, in place. Returns
// the squared Gram-Schmidt norms as exact rationals.
std::vector<Rational> lll_reduce(std::vector<std::vector<Integer>>& rows);

struct LengthAngle {
  Scalar length;
  RealSymbol angle;
  std::string cos_arg;  // exact arccos argument, empty for derived angles
};

struct NormalizedAngles {
  std::vector<LengthAngle> pairs;  // relation-free angles, nonzero lengths
  std::vector<RelationCertificate> relations_found;
  RelationCertificate basis_certificate;  // the basis together with pi
};

// Canonical form in R (x) (R / pi Q): equal angles are merged, angles that are
// Q-dependent on earlier ones and pi are rewritten.
NormalizedAngles angle_lattice_normalize(const std::vector<LengthAngle>& pairs,
                                         int precision_digits = kDefaultPrecisionDigits,
                                         const Integer& height_bound = kDefaultHeightBound);

}  // namespace dehnforge
