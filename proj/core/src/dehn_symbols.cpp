#include <algorithm>
#include <mutex>
#include <numeric>

#include "dehnforge/dehn.hpp"
#include "dehnforge/error.hpp"
#include "dehnforge/integer_factor.hpp"

namespace dehnforge {

namespace {

std::mutex registry_mutex;
std::map<std::string, PointSimplex>& e_registry() {
  static std::map<std::string, PointSimplex> r;
  return r;
}
std::map<std::string, HyperplaneSimplex>& s_registry() {
  static std::map<std::string, HyperplaneSimplex> r;
  return r;
}

std::string bracket_key(char prefix, int weight, const std::vector<std::string>& entries) {
  std::string out(1, prefix);
  out += std::to_string(weight) + "[";
  for (std::size_t i = 0; i < entries.size(); ++i) out += (i ? "," : "") + entries[i];
  return out + "]";
}

// Lexicographic comparison of a candidate produced entry by entry.
template <class Entry>
bool better(std::size_t count, Entry entry, const std::vector<const std::string*>& best, bool& equal) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::string& e = entry(i);
    if (e != *best[i]) {
      equal = false;
      return e < *best[i];
    }
  }
  equal = true;
  return false;
}

// Scale c with c^2 x squarefree, when x is rational; 1/sqrt(x) when x is a
// square in its tower; otherwise 1.
Scalar square_normalizer(const Scalar& x) {
  if (x.is_rational()) {
    const Rational q = x.rational_value();
    const Integer nd = q.get_num() * q.get_den();
    const auto split = squarefree_split(nd);
    Rational c(q.get_den(), split.square);
    c.canonicalize();
    return Scalar(c);
  }
  if (!x.is_ratfunc())
    if (auto r = sqrt_in_field(x.tower(), {})) return Scalar(1) / Scalar(*r);
  return Scalar(1);
}

}  // namespace

HyperplaneSimplex from_vertices(const QuadSpace& space, const Scalar& vol_scale, const std::vector<Vector>& vertices) {
  if (vertices.size() != space.dim()) throw Error(ErrorCode::ShapeMismatch, "need dim vertices");
  const auto inv = Matrix::from_columns(vertices).inverse();
  if (!inv) throw Error(ErrorCode::NotGenericPosition, "vertices are linearly dependent");
  std::vector<Vector> normals;
  for (std::size_t i = 0; i < vertices.size(); ++i) normals.push_back(inv->row(i));
  return {space, vol_scale, normals};
}

Symbol e_symbol(const PointSimplex& s) {
  const std::size_t m = s.points.size();
  if (m != s.dim() + 1) throw Error(ErrorCode::ShapeMismatch, "a simplex needs dim + 1 points");
  std::vector<Vector> edges;
  for (std::size_t i = 1; i < m; ++i) edges.push_back(s.points[i] - s.points[0]);
  const Scalar alpha = s.vol().evaluate(edges);
  if (alpha.is_zero()) return {"", Scalar(0)};

  std::vector<std::vector<Scalar>> d(m, std::vector<Scalar>(m));
  std::vector<std::vector<std::string>> ds(m, std::vector<std::string>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) {
        const Vector e = s.points[i] - s.points[j];
        d[i][j] = s.space.bilinear(e, e);
      }
      ds[i][j] = d[i][j].to_string();
    }

  const std::size_t count = m * (m - 1) / 2;
  std::vector<std::size_t> perm(m), best_perm;
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<const std::string*> best;
  do {
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) order.emplace_back(perm[i], perm[j]);
    const auto entry = [&](std::size_t t) -> const std::string& { return ds[order[t].first][order[t].second]; };
    bool equal = false;
    if (best.empty() || better(count, entry, best, equal)) {
      best.clear();
      for (std::size_t t = 0; t < count; ++t) best.push_back(&entry(t));
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::string> entries;
  for (const auto* e : best) entries.push_back(*e);
  const int k = static_cast<int>(m / 2);
  const std::string key = bracket_key('E', k, entries);

  const std::size_t dim = m - 1;
  Matrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t a = best_perm[0], b = best_perm[i + 1], c = best_perm[j + 1];
      g(i, j) = (d[a][b] + d[a][c] - d[b][c]) / Scalar(2);
    }
  const Scalar r = exact_sqrt(g.determinant());
  {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& reg = e_registry();
    if (!reg.count(key)) {
      PointSimplex rep{QuadSpace(g), r, {Vector(dim)}};
      for (std::size_t i = 0; i < dim; ++i) rep.points.push_back(unit_vector(dim, i));
      reg.emplace(key, std::move(rep));
    }
  }
  return {key, alpha / r};
}

Symbol s_symbol(const HyperplaneSimplex& s) {
  const std::size_t d = s.dim();
  if (s.normals.size() != d) throw Error(ErrorCode::ShapeMismatch, "need dim normals");
  const Matrix n(s.normals);
  const Scalar det_n = n.determinant();
  if (det_n.is_zero()) return {"", Scalar(0)};
  const Scalar v = det_n / s.vol_scale;
  const auto ginv = s.space.gram().inverse();
  const Matrix h = n * (*ginv) * n.transpose();

  std::vector<Scalar> lambda(d);
  Scalar lambda_prod(1);
  for (std::size_t i = 0; i < d; ++i) {
    if (h(i, i).is_zero())
      throw Error(ErrorCode::NotGenericPosition, "hyperplane " + std::to_string(i) + " is isotropic",
                  std::to_string(i));
    lambda[i] = square_normalizer(h(i, i));
    lambda_prod *= lambda[i];
  }
  Matrix h1(d, d);
  std::vector<std::vector<std::string>> pos(d, std::vector<std::string>(d)), neg = pos;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      h1(i, j) = lambda[i] * lambda[j] * h(i, j);
      pos[i][j] = h1(i, j).to_string();
      neg[i][j] = (-h1(i, j)).to_string();
    }

  const std::size_t count = d * (d + 1) / 2;
  std::vector<const std::string*> best;
  std::vector<std::size_t> best_perm;
  std::vector<int> best_signs;
  std::vector<int> sign_products;  // product of c_j for every minimizer
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
      std::vector<int> c(d, 1);
      int prod = 1;
      for (std::size_t j = 1; j < d; ++j)
        if (mask & (1u << (j - 1))) c[j] = -1, prod = -prod;
      const auto entry = [&](std::size_t t) -> const std::string& {
        std::size_t a = 0, rem = t;
        while (rem >= d - a) rem -= d - a, ++a;
        const std::size_t b = a + rem;
        return c[a] * c[b] > 0 ? pos[perm[a]][perm[b]] : neg[perm[a]][perm[b]];
      };
      bool equal = false;
      if (best.empty() || better(count, entry, best, equal)) {
        best.clear();
        for (std::size_t t = 0; t < count; ++t) best.push_back(&entry(t));
        best_perm = perm;
        best_signs = c;
        sign_products = {prod};
      } else if (equal) {
        sign_products.push_back(prod);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  Matrix hc(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      hc(a, b) = Scalar(best_signs[a] * best_signs[b]) * h1(best_perm[a], best_perm[b]);
  std::vector<std::string> entries;
  for (const auto* e : best) entries.push_back(*e);
  const std::string key = bracket_key('S', static_cast<int>(d / 2), entries);

  const bool conflict = std::any_of(sign_products.begin(), sign_products.end(),
                                    [&](int p) { return p != sign_products.front(); });
  if (conflict) return {key, Scalar(0)};

  const Scalar r = exact_sqrt(hc.determinant());
  {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& reg = s_registry();
    if (!reg.count(key)) {
      std::vector<Vector> normals;
      for (std::size_t i = 0; i < d; ++i) normals.push_back(unit_vector(d, i));
      reg.emplace(key, HyperplaneSimplex{QuadSpace(*hc.inverse()), Scalar(1) / r, normals});
    }
  }
  return {key, Scalar(sign_products.front()) * lambda_prod * v / r};
}

PointSimplex e_representative(const std::string& key) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto it = e_registry().find(key);
  if (it == e_registry().end()) throw Error(ErrorCode::UnknownGenerator, "no representative for " + key, key);
  return it->second;
}

HyperplaneSimplex s_representative(const std::string& key) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto it = s_registry().find(key);
  if (it == s_registry().end()) throw Error(ErrorCode::UnknownGenerator, "no representative for " + key, key);
  return it->second;
}

int symbol_weight(const std::string& key) {
  if (key.size() < 2 || (key[0] != 'E' && key[0] != 'S'))
    throw Error(ErrorCode::ParseError, "not a Dehn symbol: " + key, key);
  return std::stoi(key.substr(1));
}

bool s_decomposable(const std::string& key) {
  const HyperplaneSimplex rep = s_representative(key);
  const auto h = rep.space.gram().inverse();
  const std::size_t d = rep.dim();
  std::vector<bool> seen(d, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < d; ++b)
      if (!seen[b] && !(*h)(a, b).is_zero()) {
        seen[b] = true;
        ++reached;
        stack.push_back(b);
      }
  }
  return reached < d;
}

Scalar e1_length(const PointSimplex& s) {
  if (s.dim() != 1 || s.points.size() != 2) throw Error(ErrorCode::ShapeMismatch, "length needs a segment");
  return s.vol().evaluate({s.points[1] - s.points[0]});
}

Scalar s1_cross_ratio(const HyperplaneSimplex& s) {
  if (s.dim() != 2 || s.normals.size() != 2) throw Error(ErrorCode::ShapeMismatch, "cross-ratio needs two lines");
  const auto line = [](const Vector& n) { return Vector{-n[1], n[0]}; };
  const auto iso = isotropic_lines_2d(s.space, VolumeForm(s.space, s.vol_scale));
  return cross_ratio(line(s.normals[0]), line(s.normals[1]), iso.alpha, iso.beta);
}

}  // namespace dehnforge
