#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dehnforge/tensor.hpp"
#include "dehnforge/weight_complex.hpp"

namespace dehnforge {

// Coproduct rules on the symbols {x}_m of the higher Bloch groups:
// delta{x}_m = {x}_(m-1) (x) lower(x) for m >= 3 and delta{x}_2 = top(x).first ^
// top(x).second. leibniz_sign multiplies d on the F (x) B terms.
struct BStructure {
  std::string name;
  std::function<Scalar(const Scalar&)> lower;
  std::function<std::pair<Scalar, Scalar>(const Scalar&)> top;
  int leibniz_sign = 1;
};

// delta{x}_m = {x}_(m-1) (x) (1-x), delta{x}_2 = x ^ (1-x), sign -1. This is
// the choice for which d^2 = 0 in every weight.
BStructure compatible_b_structure();
// delta{x}_m = {x}_(m-1) (x) x, delta{x}_2 = (1-x) ^ x, sign +1.
BStructure standard_b_structure();
BStructure b_structure_by_name(const std::string& name);

// Five-term element of B_2 for the configuration (0, inf, 1, x, y), as
// argument -> coefficient.
std::vector<std::pair<Scalar, int>> five_term_element(const Scalar& x, const Scalar& y);
// delta_2 applied to a B_2 element, in Lambda^2 F* (x) Q.
QSum b2_coproduct(const std::vector<std::pair<Scalar, int>>& element, const BStructure& b);

// The two components of delta<x>_n. For n = 2 both are elements of F (x) F*
// written on F* symbols with F coefficients. For n >= 3 the first is keyed
// "<x>|p" (beta_(n-1) (x) B_1) and the second "{x}" with coefficient 1-x.
struct DeltaComponents {
  TensorElement first;
  TensorElement second;
};
DeltaComponents cathelineau_delta(const Scalar& x, int n, bool* heuristic = nullptr);

// Truncated Cathelineau complex of weight n on the given arguments. Degree 1
// is the free F-space on <x>_n; lower weights beta_m (2 <= m < n) are the
// quotient of F[gens] by the kernel of delta_m, entered through canonical
// representatives.
// Keys: "b<m><x>|w", "B<m>{x}|w", "F|w", with w a sorted wedge word.
WeightComplex<Scalar> build_cathelineau_complex(int n, const std::vector<Scalar>& gens,
                                                const BStructure& b = compatible_b_structure(),
                                                std::size_t cap = kDefaultGeneratorCap);

// Kernel of delta_n on F[gens], the two target components kept apart.
std::vector<FormalSum<Scalar>> cathelineau_kernel(int n, const std::vector<Scalar>& gens,
                                                  const BStructure& b = compatible_b_structure());

struct AdditiveComplex {
  WeightComplex<Scalar> total;
  // summands[k] is the weight n-k Cathelineau complex with twist k.
  std::vector<WeightComplex<Scalar>> summands;
};

// Direct sum of the twisted Cathelineau complexes of weights n, n-1, ..., 1.
// Summand k keeps its own degrees [1, n-k]; keys are prefixed "s<k>/".
AdditiveComplex build_additive_complex(int n, const std::vector<Scalar>& gens,
                                       const BStructure& b = compatible_b_structure(),
                                       std::size_t cap = kDefaultGeneratorCap);

}  // namespace dehnforge
