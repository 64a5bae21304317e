#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dehnforge/geometry.hpp"
#include "dehnforge/linear.hpp"
#include "dehnforge/tensor.hpp"

namespace dehnforge {

// 2l linear hyperplanes ker(n_i) in a 2l-dimensional quadratic space. Normals
// are covectors in the coordinates of the space.
struct HyperplaneSimplex {
  QuadSpace space;
  Scalar vol_scale;
  std::vector<Vector> normals;

  std::size_t dim() const { return space.dim(); }
  int weight() const { return static_cast<int>(space.dim()) / 2; }
};

// Hyperplane simplex whose vertex lines are spanned by the given vectors; the
// i-th hyperplane is spanned by all vertices but the i-th.
HyperplaneSimplex from_vertices(const QuadSpace& space, const Scalar& vol_scale, const std::vector<Vector>& vertices);

// Canonical name of a generator together with its sign. A zero coefficient
// means the generator vanishes by a symmetry.
struct Symbol {
  std::string key;
  Scalar coefficient;
};

// E_k generators are keyed by the vertex-permutation minimal squared-distance
// matrix. S_l generators are keyed by the Gram matrix of normals, minimal over
// permutations, sign flips and square scalings.
Symbol e_symbol(const PointSimplex& s);
Symbol s_symbol(const HyperplaneSimplex& s);
// Representatives stored when a key is first produced. Throws UnknownGenerator.
PointSimplex e_representative(const std::string& key);
HyperplaneSimplex s_representative(const std::string& key);
int symbol_weight(const std::string& key);
// True for S keys whose normal Gram matrix splits into orthogonal blocks; such
// generators are products and vanish among indecomposables.
bool s_decomposable(const std::string& key);

// Length of a one-dimensional generator: vol evaluated on x_1 - x_0.
Scalar e1_length(const PointSimplex& s);
// Cross-ratio r(M_1, M_2, L_alpha, L_beta) of a weight-one generator.
Scalar s1_cross_ratio(const HyperplaneSimplex& s);

// One partition term of the Dehn invariant, kept for reporting.
struct DehnTerm {
  std::vector<int> I;  // indices of the hyperplanes cut to form the face
  int k = 0;
  int l = 0;
  PointSimplex face;
  HyperplaneSimplex quotient;
  Scalar e_value;  // length when k = 1, otherwise the symbol sign
  std::string e_key;
  Scalar s_value;  // cross-ratio when l = 1, otherwise the symbol sign
  std::string s_key;
};

// Components keyed by (k, l). E_1 factors are absorbed into coefficients and
// S_1 factors are written on the F* (x) Q basis.
struct DehnTensor {
  int weight = 0;
  std::map<std::pair<int, int>, TensorElement> components;
  std::vector<DehnTerm> terms;
  bool heuristic = false;

  bool is_zero() const;
  DehnTensor& add_scaled(const DehnTensor& o, const Scalar& c);
  std::string to_string() const;
};

DehnTensor euclidean_dehn(const PointSimplex& g);

// Middle terms of the coproduct of S_l, components (a, b) with a, b > 0.
struct Coproduct {
  std::map<std::pair<int, int>, TensorElement> components;
  bool heuristic = false;
};
Coproduct sn_coproduct(const HyperplaneSimplex& g);

// Formal Q-combinations of E_n generators.
using EnChain = std::vector<std::pair<Scalar, PointSimplex>>;
DehnTensor euclidean_dehn(const EnChain& x);
Scalar vol_hom(const EnChain& x);

// Reduces S_l factors with l >= 2 modulo a presented truncation. Keys absent
// from the truncation are left alone.
DehnTensor reduce_s_factors(const DehnTensor& x, const PresentedSpace<Scalar>& s_relations);
// Scissor relations among hyperplane simplices spanned by vertex sets, one for
// each choice of 2l + 1 vectors.
void add_vertex_scissor_relations(PresentedSpace<Scalar>& space, const QuadSpace& w, const Scalar& vol_scale,
                                  const std::vector<Vector>& vertices);
// The S_l relations reachable from a configuration of points: for every face
// spanned by 2k of them, the projections of the others into the quotient.
PresentedSpace<Scalar> scissor_truncation(const PointSimplex& ambient, const std::vector<Vector>& points);

struct CheckResult {
  bool ok = true;
  std::string witness;
  std::string detail;
};

// (D^E (x) Id + Id (x) D) D^E = 0 on one generator. fault_partition corrupts
// the sign of that partition term, for testing the witness.
CheckResult coassoc_check(const PointSimplex& g, std::optional<std::vector<int>> fault_partition = std::nullopt);

// Alternating sum of the 2n + 1 facial simplices through D^E and volume.
CheckResult scissor_consistency(const std::vector<Vector>& points, const QuadSpace& space, const Scalar& vol_scale);

// Relation elements of E_n.
EnChain relation_skew_volume(const PointSimplex& g);
EnChain relation_permutation(const PointSimplex& g, const std::vector<int>& sigma);
EnChain relation_scissor(const QuadSpace& space, const Scalar& vol_scale, const std::vector<Vector>& points);
// x -> A x + b, transporting the form and the volume.
EnChain relation_affine(const PointSimplex& g, const Matrix& a, const Vector& b);
PointSimplex dilate(const PointSimplex& g, const Scalar& f);

}  // namespace dehnforge
