#include <algorithm>
#include <numeric>

#include "dehnforge/error.hpp"
#include "dehnforge/geometry.hpp"

namespace dehnforge {

namespace {

std::string vector_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

}  // namespace

QuadSpace::QuadSpace(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw Error(ErrorCode::InvalidInput, "Gram matrix is not symmetric");
  if (gram_.determinant().is_zero())
    throw Error(ErrorCode::DegenerateRestriction, "quadratic form is degenerate", gram_.to_string());
}

QuadSpace QuadSpace::standard(std::size_t dim) { return QuadSpace(Matrix::identity(dim)); }

Scalar QuadSpace::bilinear(const Vector& u, const Vector& v) const { return dot(u, gram_ * v); }

Scalar exact_sqrt(const Scalar& x) {
  if (x.is_ratfunc())
    throw Error(ErrorCode::UnsupportedField, "square roots of rational functions are not supported", x.to_string());
  const TowerElement& t = x.tower();
  if (auto y = sqrt_in_field(t, {})) return Scalar(*y);
  if (t.is_rational()) return Scalar(TowerElement::sqrt_rational(t.rational_value()));
  throw Error(ErrorCode::AdjunctionRequired, "sqrt(" + t.to_string() + ") is not in a multiquadratic tower",
              "sqrt(" + t.to_string() + ")");
}

VolumeForm::VolumeForm(const QuadSpace& space, Scalar scale) : scale_(std::move(scale)) {
  if (!(scale_ * scale_ == space.det()))
    throw Error(ErrorCode::InvalidInput,
                "volume scale " + scale_.to_string() + " does not square to det " + space.det().to_string());
}

VolumeForm VolumeForm::standard(const QuadSpace& space) { return VolumeForm(space, exact_sqrt(space.det())); }

Scalar VolumeForm::evaluate(const std::vector<Vector>& vectors) const {
  return scale_ * Matrix::from_columns(vectors).determinant();
}

Matrix restricted_gram(const QuadSpace& s, const std::vector<Vector>& basis) {
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) g(i, j) = g(j, i) = s.bilinear(basis[i], basis[j]);
  return g;
}

QuadSpace induced_form(const QuadSpace& s, const std::vector<Vector>& basis) {
  if (!basis.empty() && Matrix(basis).rank() < basis.size())
    throw Error(ErrorCode::InvalidInput, "subspace basis is linearly dependent");
  const Matrix g = restricted_gram(s, basis);
  if (g.determinant().is_zero()) {
    const Vector c = g.nullspace().front();
    Vector radical(s.dim());
    for (std::size_t i = 0; i < basis.size(); ++i) radical = radical + scale(basis[i], c[i]);
    throw Error(ErrorCode::DegenerateRestriction, "restriction has radical vector " + vector_string(radical),
                vector_string(radical));
  }
  return QuadSpace(g);
}

Quotient quotient_form(const QuadSpace& s, const std::vector<Vector>& subspace) {
  if (!subspace.empty()) induced_form(s, subspace);
  std::vector<Vector> complement;
  if (subspace.empty()) {
    for (std::size_t i = 0; i < s.dim(); ++i) complement.push_back(unit_vector(s.dim(), i));
  } else {
    std::vector<Vector> rows;
    for (const auto& w : subspace) rows.push_back(s.gram() * w);
    complement = Matrix(rows).nullspace();
  }
  return {QuadSpace(restricted_gram(s, complement)), complement};
}

Multivector star_operator(const QuadSpace& s, const VolumeForm& vol, const Multivector& x) {
  const int d = static_cast<int>(s.dim());
  Multivector out;
  for (const auto& [set, c] : x) {
    const int k = static_cast<int>(set.size());
    for (const auto& t : subsets_of_size(d, k)) {
      std::vector<std::size_t> rs(set.begin(), set.end());
      std::vector<std::size_t> cs(t.begin(), t.end());
      const Scalar pairing = k == 0 ? Scalar(1) : s.gram().submatrix(rs, cs).determinant();
      if (pairing.is_zero()) continue;
      std::vector<int> u;
      for (int i = 0; i < d; ++i)
        if (!std::binary_search(t.begin(), t.end(), i)) u.push_back(i);
      std::vector<int> ut = u;
      ut.insert(ut.end(), t.begin(), t.end());
      const Scalar denom = vol.scale() * Scalar(permutation_sign(ut));
      out.add(u, c * pairing / denom);
    }
  }
  return out;
}

Matrix star_matrix_1(const QuadSpace& s, const VolumeForm& vol) {
  const int d = static_cast<int>(s.dim());
  Matrix m(s.dim(), s.dim());
  for (int r = 0; r < d; ++r) {
    const Multivector img = star_operator(s, vol, Multivector(std::vector<int>{r}, Scalar(1)));
    for (const auto& [set, c] : img) {
      if (set.size() != 1)
        throw Error(ErrorCode::ShapeMismatch, "star of a vector is a vector only in dimension 2");
      m(static_cast<std::size_t>(set[0]), static_cast<std::size_t>(r)) = c;
    }
  }
  return m;
}

namespace {

Vector normalized_direction(Vector v) {
  for (const auto& x : v)
    if (!x.is_zero()) return scale(v, Scalar(1) / x);
  return v;
}

Vector eigenline(const Matrix& s, const Scalar& lambda) {
  Matrix m = s;
  m(0, 0) -= lambda;
  m(1, 1) -= lambda;
  Vector v;
  if (!m(0, 0).is_zero() || !m(0, 1).is_zero())
    v = {-m(0, 1), m(0, 0)};
  else
    v = {-m(1, 1), m(1, 0)};
  return normalized_direction(v);
}

}  // namespace

IsotropicPair isotropic_lines_2d(const QuadSpace& s, const VolumeForm& vol,
                                 const std::optional<std::vector<Integer>>& field) {
  if (s.dim() != 2) throw Error(ErrorCode::ShapeMismatch, "isotropic lines are computed in dimension 2");
  const Scalar disc = -s.det();
  if (field && !sqrt_in_field(disc.as_tower(), *field)) {
    const std::string need = disc.is_rational() ? "sqrt(" + signed_core(disc.rational_value()).get_str() + ")"
                                                : "sqrt(" + disc.to_string() + ")";
    throw Error(ErrorCode::IrrationalDiscriminant, "isotropic lines need " + need, need);
  }
  const Matrix star = star_matrix_1(s, vol);
  const Scalar i(TowerElement::imaginary_unit());
  return {eigenline(star, i), eigenline(star, -i)};
}

Scalar cross_ratio(const Vector& m1, const Vector& m2, const Vector& l1, const Vector& l2) {
  const auto bracket = [](const Vector& a, const Vector& b) { return a[0] * b[1] - a[1] * b[0]; };
  const std::vector<const Vector*> lines{&m1, &m2, &l1, &l2};
  for (std::size_t a = 0; a < 4; ++a) {
    if (is_zero_vector(*lines[a])) throw Error(ErrorCode::CoincidentLines, "zero direction vector");
    for (std::size_t b = a + 1; b < 4; ++b)
      if (bracket(*lines[a], *lines[b]).is_zero())
        throw Error(ErrorCode::CoincidentLines, "lines " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " coincide",
                    std::to_string(a + 1) + "," + std::to_string(b + 1));
  }
  return bracket(m1, l1) * bracket(m2, l2) / (bracket(m1, l2) * bracket(m2, l1));
}

Scalar slope_cross_ratio(const std::optional<Scalar>& a, const std::optional<Scalar>& b,
                         const std::optional<Scalar>& c, const std::optional<Scalar>& d) {
  const auto dir = [](const std::optional<Scalar>& m) { return m ? Vector{1, *m} : Vector{0, 1}; };
  return cross_ratio(dir(a), dir(b), dir(c), dir(d));
}

}  // namespace dehnforge
