#include "dehnforge/classical.hpp"

#include <algorithm>
#include <sstream>

#include "dehnforge/embed.hpp"
#include "dehnforge/error.hpp"

namespace dehnforge {

namespace {

int sign_of(const Scalar& x) {
  if (!x.is_tower() || !x.tower().is_real())
    throw Error(ErrorCode::NotRealEmbeddable, x.to_string() + " is not a real number", x.to_string());
  return real_sign(x.tower());
}

void require_positive_definite(const QuadSpace& s) {
  const std::size_t d = s.dim();
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < k; ++a) idx.push_back(a);
    if (sign_of(s.gram().submatrix(idx, idx).determinant()) <= 0)
      throw Error(ErrorCode::NotRealEmbeddable, "form is not positive definite", s.gram().to_string());
  }
}

}  // namespace

Scalar dihedral_cos(const PointSimplex& t, int i, int j) {
  const auto inv = Matrix::from_columns({t.points[1] - t.points[0], t.points[2] - t.points[0],
                                         t.points[3] - t.points[0]})
                       .inverse();
  if (!inv) throw Error(ErrorCode::NotEuclideanSimplex, "flat tetrahedron");
  // Gradients of the barycentric coordinates; row a - 1 belongs to vertex a.
  auto grad = [&](int v) {
    if (v > 0) return inv->row(static_cast<std::size_t>(v - 1));
    Vector g(3);
    for (std::size_t a = 0; a < 3; ++a) g = g - inv->row(a);
    return g;
  };
  int k = -1;
  int l = -1;
  for (int v = 0; v < 4; ++v)
    if (v != i && v != j) (k < 0 ? k : l) = v;
  const Matrix qinv = *t.space.gram().inverse();
  const Vector gk = grad(k);
  const Vector gl = grad(l);
  const Scalar kl = dot(gk, qinv * gl);
  const Scalar kk = dot(gk, qinv * gk);
  const Scalar ll = dot(gl, qinv * gl);
  // The inward normals meet at pi minus the dihedral angle.
  return -kl / exact_sqrt(kk * ll);
}

ClassicalDehnValue classical_dehn_3d(const EnChain& polytope, int precision_digits, const Integer& height_bound) {
  ClassicalDehnValue out;
  for (const auto& [mult, g] : polytope) {
    if (g.dim() != 3 || g.points.size() != 4)
      throw Error(ErrorCode::ShapeMismatch, "classical Dehn invariant takes tetrahedra in dimension 3");
    if (!mult.is_rational()) throw Error(ErrorCode::InvalidInput, "multiplicities must be rational");
    require_positive_definite(g.space);
    const int orient = sign_of(volume(g));
    if (orient == 0) continue;
    const Rational m = mult.rational_value() * orient;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const Vector e = g.points[static_cast<std::size_t>(j)] - g.points[static_cast<std::size_t>(i)];
        const Scalar len = exact_sqrt(g.space.bilinear(e, e));
        const Scalar c = dihedral_cos(g, i, j);
        sign_of(len);
        sign_of(c);
        auto it = std::find_if(out.pairs.begin(), out.pairs.end(),
                               [&](const ClassicalPair& p) { return p.length == len && p.cos_arg == c; });
        if (it == out.pairs.end())
          out.pairs.push_back({len, c, m});
        else
          it->multiplicity += m;
      }
  }
  std::erase_if(out.pairs, [](const ClassicalPair& p) { return p.multiplicity == 0; });
  std::vector<LengthAngle> la;
  for (const auto& p : out.pairs)
    la.push_back({p.length * Scalar(p.multiplicity), arccos_symbol(p.cos_arg), p.cos_arg.to_string()});
  out.normalized = angle_lattice_normalize(la, precision_digits, height_bound);
  return out;
}

std::string ClassicalDehnValue::to_string() const {
  std::ostringstream os;
  if (normalized.pairs.empty()) os << "0";
  for (std::size_t i = 0; i < normalized.pairs.size(); ++i)
    os << (i ? " + " : "") << "(" << normalized.pairs[i].length.to_string() << ") (x) "
       << normalized.pairs[i].angle.name;
  os << " [" << normalized.basis_certificate.to_string() << "]";
  return os.str();
}

}  // namespace dehnforge
