#pragma once

// Partition machinery shared by the Dehn sources and the complexes built on it.

#include <optional>
#include <string>
#include <vector>

#include "dehnforge/dehn.hpp"

namespace dehnforge::detail {

// One tensor factor: a scalar (length or symbol sign) and a Q-vector of keys.
struct Part {
  Scalar scale = 1;
  QSum keys;
  std::string key;  // symbol key when the factor is not normalized
  std::optional<Scalar> cross_ratio;
};

Part e_part(const PointSimplex& face, bool* heuristic);
Part s_part(const HyperplaneSimplex& quot, bool* heuristic);
TensorElement combine(const std::vector<const Part*>& parts, const Scalar& c);

// sign is the shuffle sign of J followed by I.
struct Split {
  std::vector<int> I;
  int sign = 1;
  int k = 0;
  int l = 0;
  PointSimplex face;
  HyperplaneSimplex quotient;
};
struct SSplit {
  std::vector<int> I;
  int sign = 1;
  int a = 0;
  int b = 0;
  HyperplaneSimplex face;
  HyperplaneSimplex quotient;
};

Vector facet_normal(const std::vector<Vector>& points, std::size_t omit);
std::vector<Split> point_splits(const PointSimplex& g);
std::vector<SSplit> hyperplane_splits(const HyperplaneSimplex& g);

}  // namespace dehnforge::detail
