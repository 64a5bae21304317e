#include <algorithm>
#include <tuple>

#include "dehnforge/dehn.hpp"
#include "dehnforge/dehn_internal.hpp"
#include "dehnforge/error.hpp"

namespace dehnforge {

namespace {

std::string set_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

using Triple = std::map<std::tuple<int, int, int>, TensorElement>;

void add_into(Triple& acc, const std::tuple<int, int, int>& key, const TensorElement& t, const Scalar& c) {
  auto& slot = acc[key];
  slot.add_scaled(t, c);
  if (slot.is_zero()) acc.erase(key);
}

// Both halves of the composed invariant restricted to one outer partition.
Triple outer_contribution(const detail::Split& s, bool* heuristic) {
  Triple out;
  const detail::Part e = detail::e_part(s.face, heuristic);
  const detail::Part q = detail::s_part(s.quotient, heuristic);
  if (s.k >= 2)
    for (const auto& inner : detail::point_splits(s.face)) {
      const detail::Part e2 = detail::e_part(inner.face, heuristic);
      const detail::Part q2 = detail::s_part(inner.quotient, heuristic);
      add_into(out, {inner.k, inner.l, s.l}, detail::combine({&e2, &q2, &q}, Scalar(s.sign * inner.sign)),
               Scalar(1));
    }
  // Id (x) D passes the face factor, of dimension 2k - 1.
  const Scalar koszul((2 * s.k - 1) % 2 == 0 ? 1 : -1);
  if (s.l >= 2)
    for (const auto& inner : detail::hyperplane_splits(s.quotient)) {
      const detail::Part a = detail::s_part(inner.face, heuristic);
      const detail::Part b = detail::s_part(inner.quotient, heuristic);
      add_into(out, {s.k, inner.a, inner.b}, detail::combine({&e, &a, &b}, Scalar(s.sign * inner.sign)), koszul);
    }
  return out;
}

}  // namespace

CheckResult coassoc_check(const PointSimplex& g, std::optional<std::vector<int>> fault_partition) {
  CheckResult res;
  if (volume(g).is_zero()) return res;
  require_euclidean(g);
  bool heuristic = false;
  Triple total;
  std::vector<std::pair<std::vector<int>, Triple>> parts;
  for (const auto& s : detail::point_splits(g)) {
    Triple t = outer_contribution(s, &heuristic);
    const Scalar sign = fault_partition && *fault_partition == s.I ? Scalar(-1) : Scalar(1);
    for (const auto& [key, v] : t) add_into(total, key, v, sign);
    parts.emplace_back(s.I, std::move(t));
  }
  if (total.empty()) return res;
  res.ok = false;
  const auto& [key, residual] = *total.begin();
  const std::string bad = residual.begin()->first;
  for (const auto& [I, t] : parts) {
    auto it = t.find(key);
    if (it != t.end() && !it->second.coefficient(bad).is_zero()) {
      res.witness = set_string(I);
      break;
    }
  }
  res.detail = "nonzero component (" + std::to_string(std::get<0>(key)) + "," + std::to_string(std::get<1>(key)) +
               "," + std::to_string(std::get<2>(key)) + "): " + residual.to_string();
  return res;
}

DehnTensor reduce_s_factors(const DehnTensor& x, const PresentedSpace<Scalar>& s_relations) {
  DehnTensor out;
  out.weight = x.weight;
  out.heuristic = x.heuristic;
  for (const auto& [kl, t] : x.components) {
    if (kl.second < 2) {
      out.components[kl] = t;
      continue;
    }
    // Group by the E part, reduce the trailing S key.
    std::map<std::string, std::pair<FormalSum<Scalar>, FormalSum<Scalar>>> groups;
    for (const auto& [key, c] : t) {
      const auto cut = key.rfind(kTensorSep);
      const std::string prefix = cut == std::string::npos ? "" : key.substr(0, cut);
      const std::string s = cut == std::string::npos ? key : key.substr(cut + 1);
      auto& g = groups[prefix];
      (s_relations.has_generator(s) ? g.first : g.second).add(s, c);
    }
    TensorElement reduced;
    for (const auto& [prefix, g] : groups) {
      const auto known = s_relations.canonical_form(g.first) + g.second;
      for (const auto& [s, c] : known) reduced.add(prefix.empty() ? s : prefix + kTensorSep + s, c);
    }
    if (!reduced.is_zero()) out.components[kl] = std::move(reduced);
  }
  return out;
}

void add_vertex_scissor_relations(PresentedSpace<Scalar>& space, const QuadSpace& w, const Scalar& vol_scale,
                                  const std::vector<Vector>& vertices) {
  const int d = static_cast<int>(w.dim());
  for (const auto& subset : subsets_of_size(static_cast<int>(vertices.size()), d + 1)) {
    FormalSum<Scalar> rel;
    bool valid = true;
    for (int omit = 0; omit <= d && valid; ++omit) {
      std::vector<Vector> vs;
      for (int a = 0; a <= d; ++a)
        if (a != omit) vs.push_back(vertices[static_cast<std::size_t>(subset[static_cast<std::size_t>(a)])]);
      try {
        const Symbol s = s_symbol(from_vertices(w, vol_scale, vs));
        if (s.key.empty()) {
          valid = false;
          break;
        }
        space.add_generator(s.key);
        rel.add(s.key, Scalar(omit % 2 == 0 ? 1 : -1) * s.coefficient);
      } catch (const Error&) {
        valid = false;
      }
    }
    if (valid && !rel.is_zero()) space.add_relation(rel);
  }
}

PresentedSpace<Scalar> scissor_truncation(const PointSimplex& ambient, const std::vector<Vector>& points) {
  PresentedSpace<Scalar> out;
  const int m = static_cast<int>(points.size());
  const int n = (m - 1) / 2;
  for (int k = 1; n - k >= 2; ++k) {
    for (const auto& face : subsets_of_size(m, 2 * k)) {
      std::vector<Vector> u;
      for (std::size_t a = 1; a < face.size(); ++a)
        u.push_back(points[static_cast<std::size_t>(face[a])] - points[static_cast<std::size_t>(face[0])]);
      const Matrix gu = restricted_gram(ambient.space, u);
      if (gu.determinant().is_zero()) continue;
      const Scalar alpha_u = exact_sqrt(gu.determinant());
      const auto w = quotient_form(ambient.space, u).complement;
      std::vector<Vector> cols = u;
      cols.insert(cols.end(), w.begin(), w.end());
      const Matrix basis = Matrix::from_columns(cols);
      const Scalar scale_w = ambient.vol_scale * basis.determinant() / alpha_u;
      const auto inv = basis.inverse();
      std::vector<Vector> projected;
      for (int a = 0; a < m; ++a) {
        if (std::binary_search(face.begin(), face.end(), a)) continue;
        const Vector coords = *inv * (points[static_cast<std::size_t>(a)] - points[static_cast<std::size_t>(face[0])]);
        projected.emplace_back(coords.begin() + static_cast<long>(u.size()), coords.end());
      }
      add_vertex_scissor_relations(out, QuadSpace(restricted_gram(ambient.space, w)), scale_w, projected);
    }
  }
  return out;
}

CheckResult scissor_consistency(const std::vector<Vector>& points, const QuadSpace& space, const Scalar& vol_scale) {
  const std::size_t m = points.size();
  if (m != space.dim() + 2 || m % 2 == 0)
    throw Error(ErrorCode::ShapeMismatch, "the scissor relation needs 2n + 1 points in dimension 2n - 1");
  for (std::size_t i = 0; i < m; ++i) {
    PointSimplex f{space, vol_scale, {}};
    for (std::size_t a = 0; a < m; ++a)
      if (a != i) f.points.push_back(points[a]);
    if (auto bad = degenerate_face(f))
      throw Error(ErrorCode::NotEuclideanSimplex, "facial simplex " + std::to_string(i) + " is not Euclidean",
                  std::to_string(i));
  }
  const EnChain chain = relation_scissor(space, vol_scale, points);
  CheckResult res;
  const Scalar v = vol_hom(chain);
  DehnTensor d = euclidean_dehn(chain);
  if (m >= 7) d = reduce_s_factors(d, scissor_truncation(PointSimplex{space, vol_scale, {}}, points));
  if (!v.is_zero()) {
    res.ok = false;
    res.witness = "volume";
    res.detail = "alternating volume sum " + v.to_string();
  } else if (!d.is_zero()) {
    res.ok = false;
    res.witness = "dehn";
    res.detail = d.to_string();
  }
  return res;
}

EnChain relation_skew_volume(const PointSimplex& g) {
  PointSimplex neg = g;
  neg.vol_scale = -g.vol_scale;
  return {{Scalar(1), g}, {Scalar(1), neg}};
}

EnChain relation_permutation(const PointSimplex& g, const std::vector<int>& sigma) {
  PointSimplex p = g;
  for (std::size_t i = 0; i < sigma.size(); ++i) p.points[i] = g.points[static_cast<std::size_t>(sigma[i])];
  return {{Scalar(1), g}, {Scalar(-permutation_sign(sigma)), p}};
}

EnChain relation_scissor(const QuadSpace& space, const Scalar& vol_scale, const std::vector<Vector>& points) {
  EnChain out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    PointSimplex f{space, vol_scale, {}};
    for (std::size_t a = 0; a < points.size(); ++a)
      if (a != i) f.points.push_back(points[a]);
    out.emplace_back(Scalar(i % 2 == 0 ? 1 : -1), std::move(f));
  }
  return out;
}

EnChain relation_affine(const PointSimplex& g, const Matrix& a, const Vector& b) {
  const auto inv = a.inverse();
  if (!inv) throw Error(ErrorCode::InvalidInput, "affine map is not invertible");
  PointSimplex moved{QuadSpace(inv->transpose() * g.space.gram() * *inv), g.vol_scale / a.determinant(), {}};
  for (const auto& x : g.points) moved.points.push_back(a * x + b);
  return {{Scalar(1), g}, {Scalar(-1), moved}};
}

PointSimplex dilate(const PointSimplex& g, const Scalar& f) {
  PointSimplex out = g;
  for (auto& x : out.points) x = scale(x, f);
  return out;
}

}  // namespace dehnforge
