#include "dehnforge/error.hpp"
#include "dehnforge/geometry.hpp"

namespace dehnforge {

namespace {

std::string set_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

Scalar volume(const PointSimplex& s) {
  const std::size_t d = s.dim();
  if (s.points.size() != d + 1) throw Error(ErrorCode::ShapeMismatch, "a simplex needs dim + 1 points");
  std::vector<Vector> edges;
  for (std::size_t i = 1; i <= d; ++i) edges.push_back(s.points[i] - s.points[0]);
  Rational fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<long>(i);
  return s.vol().evaluate(edges) / Scalar(fact);
}

std::optional<std::vector<int>> degenerate_face(const PointSimplex& s) {
  const int n = static_cast<int>(s.points.size());
  for (int k = 2; k <= n; ++k)
    for (const auto& face : subsets_of_size(n, k)) {
      std::vector<Vector> edges;
      for (std::size_t i = 1; i < face.size(); ++i)
        edges.push_back(s.points[static_cast<std::size_t>(face[i])] - s.points[static_cast<std::size_t>(face[0])]);
      if (restricted_gram(s.space, edges).determinant().is_zero()) return face;
    }
  return std::nullopt;
}

void require_euclidean(const PointSimplex& s) {
  if (auto f = degenerate_face(s))
    throw Error(ErrorCode::NotEuclideanSimplex, "face " + set_string(*f) + " carries a degenerate form",
                set_string(*f));
}

std::vector<Vector> points_from_hyperplanes(const std::vector<AffineHyperplane>& planes) {
  if (planes.empty()) return {};
  const std::size_t d = planes[0].normal.size();
  if (planes.size() != d + 1) throw Error(ErrorCode::ShapeMismatch, "need dim + 1 hyperplanes");
  std::vector<Vector> out;
  for (std::size_t omit = 0; omit < planes.size(); ++omit) {
    Matrix a(d, d);
    Vector b;
    std::size_t r = 0;
    for (std::size_t i = 0; i < planes.size(); ++i) {
      if (i == omit) continue;
      for (std::size_t j = 0; j < d; ++j) a(r, j) = planes[i].normal[j];
      b.push_back(planes[i].offset);
      ++r;
    }
    const auto inv = a.inverse();
    if (!inv)
      throw Error(ErrorCode::NotGenericPosition,
                  "hyperplanes other than " + std::to_string(omit) + " do not meet in a single point",
                  std::to_string(omit));
    out.push_back(*inv * b);
  }
  return out;
}

std::vector<AffineHyperplane> facet_hyperplanes(const std::vector<Vector>& points) {
  std::vector<AffineHyperplane> out;
  for (std::size_t omit = 0; omit < points.size(); ++omit) {
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
      throw Error(ErrorCode::NotGenericPosition, "facet " + std::to_string(omit) + " is degenerate",
                  std::to_string(omit));
    out.push_back({ns[0], dot(ns[0], *base)});
  }
  return out;
}

}  // namespace dehnforge
