#include "dehnforge/dehn.hpp"

#include <algorithm>
#include <sstream>

#include "dehnforge/dehn_internal.hpp"
#include "dehnforge/error.hpp"
#include "dehnforge/multiplicative.hpp"

namespace dehnforge {

namespace detail {

Part e_part(const PointSimplex& face, bool* heuristic) {
  (void)heuristic;
  if (face.dim() == 1) return {e1_length(face), QSum(std::string{}, Rational(1)), ""};
  const Symbol s = e_symbol(face);
  return {s.coefficient, QSum(s.key, Rational(1)), s.key};
}

Part s_part(const HyperplaneSimplex& quot, bool* heuristic) {
  if (quot.dim() == 2) {
    const Scalar cr = s1_cross_ratio(quot);
    return {Scalar(1), multiplicative_vector(cr, heuristic), "", cr};
  }
  const Symbol s = s_symbol(quot);
  return {s.coefficient, QSum(s.key, Rational(1)), s.key};
}

TensorElement combine(const std::vector<const Part*>& parts, const Scalar& c) {
  Scalar scale = c;
  QSum keys(std::string{}, Rational(1));
  for (const Part* p : parts) {
    scale *= p->scale;
    QSum next;
    for (const auto& [ka, va] : keys)
      for (const auto& [kb, vb] : p->keys) {
        const std::string k = ka.empty() ? kb : kb.empty() ? ka : ka + kTensorSep + kb;
        next.add(k, Rational(va * vb));
      }
    keys = std::move(next);
  }
  TensorElement out;
  if (scale.is_zero()) return out;
  for (const auto& [k, q] : keys) out.add(k, scale * Scalar(q));
  return out;
}

namespace {

Vector covector_on(const Vector& n, const std::vector<Vector>& basis) {
  Vector out;
  for (const auto& b : basis) out.push_back(dot(n, b));
  return out;
}

// The scale of alpha_J on a complement W once alpha_I(U) is fixed.
Scalar complement_scale(const Scalar& vol_scale, const std::vector<Vector>& u, const std::vector<Vector>& w,
                        const Scalar& alpha_u) {
  std::vector<Vector> cols = u;
  cols.insert(cols.end(), w.begin(), w.end());
  return vol_scale * Matrix::from_columns(cols).determinant() / alpha_u;
}

int shuffle_sign(const std::vector<int>& first, const std::vector<int>& second) {
  std::vector<int> p = first;
  p.insert(p.end(), second.begin(), second.end());
  return permutation_sign(p);
}

}  // namespace

Vector facet_normal(const std::vector<Vector>& points, std::size_t omit) {
  std::vector<Vector> edges;
  const Vector* base = nullptr;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i == omit) continue;
    if (!base)
      base = &points[i];
    else
      edges.push_back(points[i] - *base);
  }
  const auto ns = Matrix(edges).nullspace();
  if (ns.size() != 1)
    throw Error(ErrorCode::NotEuclideanSimplex, "facet " + std::to_string(omit) + " is degenerate",
                std::to_string(omit));
  return ns[0];
}

std::vector<Split> point_splits(const PointSimplex& g) {
  const int m = static_cast<int>(g.points.size());
  const int n = m / 2;
  std::vector<Vector> normals;
  for (int i = 0; i < m; ++i) normals.push_back(facet_normal(g.points, static_cast<std::size_t>(i)));
  std::vector<Split> out;
  for (int l = 1; l < n; ++l) {
    for (const auto& I : subsets_of_size(m, 2 * l)) {
      std::vector<int> J;
      for (int i = 0; i < m; ++i)
        if (!std::binary_search(I.begin(), I.end(), i)) J.push_back(i);
      std::vector<Vector> u;
      for (std::size_t a = 1; a < J.size(); ++a)
        u.push_back(g.points[static_cast<std::size_t>(J[a])] - g.points[static_cast<std::size_t>(J[0])]);
      const Matrix gu = restricted_gram(g.space, u);
      const Scalar alpha_u = exact_sqrt(gu.determinant());
      Split s;
      s.I = I;
      s.sign = shuffle_sign(J, I);
      s.k = n - l;
      s.l = l;
      s.face = PointSimplex{QuadSpace(gu), alpha_u, {Vector(u.size())}};
      for (std::size_t a = 0; a < u.size(); ++a) s.face.points.push_back(unit_vector(u.size(), a));
      const auto w = quotient_form(g.space, u).complement;
      s.quotient.space = QuadSpace(restricted_gram(g.space, w));
      s.quotient.vol_scale = complement_scale(g.vol_scale, u, w, alpha_u);
      for (int i : I) s.quotient.normals.push_back(covector_on(normals[static_cast<std::size_t>(i)], w));
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<SSplit> hyperplane_splits(const HyperplaneSimplex& g) {
  const int d = static_cast<int>(g.dim());
  const int l = d / 2;
  std::vector<SSplit> out;
  for (int b = 1; b < l; ++b) {
    for (const auto& I : subsets_of_size(d, 2 * b)) {
      std::vector<int> J;
      for (int i = 0; i < d; ++i)
        if (!std::binary_search(I.begin(), I.end(), i)) J.push_back(i);
      std::vector<Vector> rows;
      for (int i : I) rows.push_back(g.normals[static_cast<std::size_t>(i)]);
      const auto u = Matrix(rows).nullspace();
      const Matrix gu = restricted_gram(g.space, u);
      const Scalar alpha_u = exact_sqrt(gu.determinant());
      const auto w = quotient_form(g.space, u).complement;
      SSplit s;
      s.I = I;
      s.sign = shuffle_sign(J, I);
      s.a = l - b;
      s.b = b;
      s.face = HyperplaneSimplex{QuadSpace(gu), alpha_u, {}};
      for (int j : J) s.face.normals.push_back(covector_on(g.normals[static_cast<std::size_t>(j)], u));
      s.quotient = HyperplaneSimplex{QuadSpace(restricted_gram(g.space, w)),
                                     complement_scale(g.vol_scale, u, w, alpha_u), {}};
      for (int i : I) s.quotient.normals.push_back(covector_on(g.normals[static_cast<std::size_t>(i)], w));
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace detail

bool DehnTensor::is_zero() const {
  for (const auto& [kl, t] : components)
    if (!t.is_zero()) return false;
  return true;
}

DehnTensor& DehnTensor::add_scaled(const DehnTensor& o, const Scalar& c) {
  if (weight == 0) weight = o.weight;
  for (const auto& [kl, t] : o.components) {
    auto& mine = components[kl];
    mine.add_scaled(t, c);
    if (mine.is_zero()) components.erase(kl);
  }
  heuristic = heuristic || o.heuristic;
  return *this;
}

std::string DehnTensor::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [kl, t] : components) {
    os << (first ? "" : "; ") << "(" << kl.first << "," << kl.second << "): " << t.to_string();
    first = false;
  }
  return first ? "0" : os.str();
}

DehnTensor euclidean_dehn(const PointSimplex& g) {
  if (g.points.size() != g.dim() + 1 || g.points.size() % 2 != 0)
    throw Error(ErrorCode::ShapeMismatch, "E_n generators have 2n points in dimension 2n - 1");
  DehnTensor out;
  out.weight = static_cast<int>(g.points.size() / 2);
  if (volume(g).is_zero()) return out;
  require_euclidean(g);
  for (auto& s : detail::point_splits(g)) {
    const detail::Part e = detail::e_part(s.face, &out.heuristic);
    const detail::Part q = detail::s_part(s.quotient, &out.heuristic);
    const TensorElement t = detail::combine({&e, &q}, Scalar(s.sign));
    auto& comp = out.components[{s.k, s.l}];
    comp += t;
    if (comp.is_zero()) out.components.erase({s.k, s.l});
    DehnTerm term;
    term.I = s.I;
    term.k = s.k;
    term.l = s.l;
    term.face = std::move(s.face);
    term.quotient = std::move(s.quotient);
    term.e_value = e.scale;
    term.e_key = e.key;
    term.s_value = q.cross_ratio ? *q.cross_ratio : q.scale;
    term.s_key = q.key;
    out.terms.push_back(std::move(term));
  }
  return out;
}

Coproduct sn_coproduct(const HyperplaneSimplex& g) {
  if (g.normals.size() != g.dim() || g.dim() % 2 != 0)
    throw Error(ErrorCode::ShapeMismatch, "S_l generators have 2l hyperplanes in dimension 2l");
  Coproduct out;
  if (Matrix(g.normals).determinant().is_zero()) return out;
  for (const auto& s : detail::hyperplane_splits(g)) {
    const detail::Part a = detail::s_part(s.face, &out.heuristic);
    const detail::Part b = detail::s_part(s.quotient, &out.heuristic);
    auto& comp = out.components[{s.a, s.b}];
    comp += detail::combine({&a, &b}, Scalar(s.sign));
    if (comp.is_zero()) out.components.erase({s.a, s.b});
  }
  return out;
}

namespace {

void require_same_dimension(const EnChain& x) {
  for (const auto& [c, g] : x)
    if (g.dim() != x.front().second.dim())
      throw Error(ErrorCode::MixedWeights, "chain mixes dimensions " + std::to_string(x.front().second.dim()) +
                                               " and " + std::to_string(g.dim()));
}

}  // namespace

DehnTensor euclidean_dehn(const EnChain& x) {
  DehnTensor out;
  if (x.empty()) return out;
  require_same_dimension(x);
  out.weight = static_cast<int>(x.front().second.points.size() / 2);
  for (const auto& [c, g] : x) {
    DehnTensor d = euclidean_dehn(g);
    d.terms.clear();
    out.add_scaled(d, c);
  }
  return out;
}

Scalar vol_hom(const EnChain& x) {
  if (x.empty()) return Scalar(0);
  require_same_dimension(x);
  Scalar v;
  for (const auto& [c, g] : x) v += c * volume(g);
  return v;
}

}  // namespace dehnforge
