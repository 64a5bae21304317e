#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dehnforge/formal_sum.hpp"
#include "dehnforge/scalar.hpp"

namespace dehnforge {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  explicit Matrix(const std::vector<Vector>& rows);
  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix scaled(const Scalar& c) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Scalar determinant() const;
  std::size_t rank() const;
  std::optional<Matrix> inverse() const;
  // Basis of {v : M v = 0}.
  std::vector<Vector> nullspace() const;
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  bool is_symmetric() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

Scalar dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const Scalar& c);
bool is_zero_vector(const Vector& v);
Vector unit_vector(std::size_t dim, std::size_t i);

// (V, Q) with a nondegenerate symmetric Gram matrix.
class QuadSpace {
 public:
  QuadSpace() = default;
  explicit QuadSpace(Matrix gram);
  static QuadSpace standard(std::size_t dim);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Scalar bilinear(const Vector& u, const Vector& v) const;
  Scalar det() const { return gram_.determinant(); }

 private:
  Matrix gram_;
};

// vol(e_1 ^ ... ^ e_d) = scale with scale^2 = det of the Gram matrix.
class VolumeForm {
 public:
  VolumeForm(const QuadSpace& space, Scalar scale);
  // The root of det with positive leading coordinate.
  static VolumeForm standard(const QuadSpace& space);

  const Scalar& scale() const { return scale_; }
  VolumeForm negated() const { return VolumeForm(-scale_); }
  Scalar evaluate(const std::vector<Vector>& vectors) const;

 private:
  explicit VolumeForm(Scalar scale) : scale_(std::move(scale)) {}
  Scalar scale_;
};

// Square root of a rational or tower scalar, adjoining as needed. The root is
// the canonical positive (or +i-multiple) one.
Scalar exact_sqrt(const Scalar& x);

// Gram matrix of Q restricted to span(basis). Raises DegenerateRestriction with
// a radical vector as witness when require_nondegenerate is set.
QuadSpace induced_form(const QuadSpace& s, const std::vector<Vector>& basis);
Matrix restricted_gram(const QuadSpace& s, const std::vector<Vector>& basis);

struct Quotient {
  QuadSpace form;
  std::vector<Vector> complement;  // basis of the Q-orthogonal complement
};
Quotient quotient_form(const QuadSpace& s, const std::vector<Vector>& subspace);

// Elements of Lambda^k V on sorted index sets.
using Multivector = FormalSum<Scalar, std::vector<int>>;
Multivector star_operator(const QuadSpace& s, const VolumeForm& vol, const Multivector& x);
// Matrix of * on Lambda^1 in the standard basis (columns are images).
Matrix star_matrix_1(const QuadSpace& s, const VolumeForm& vol);

struct IsotropicPair {
  Vector alpha;  // eigenline of * for the eigenvalue +i (dim 2)
  Vector beta;
};
// Raises IrrationalDiscriminant when a working field is given that does not
// contain sqrt(-det); the witness names the required radicand.
IsotropicPair isotropic_lines_2d(const QuadSpace& s, const VolumeForm& vol,
                                 const std::optional<std::vector<Integer>>& field = std::nullopt);

// Cross-ratio of four lines through the origin of a plane, given by direction
// vectors: [m1,l1][m2,l2] / ([m1,l2][m2,l1]).
Scalar cross_ratio(const Vector& m1, const Vector& m2, const Vector& l1, const Vector& l2);
Scalar slope_cross_ratio(const std::optional<Scalar>& a, const std::optional<Scalar>& b,
                         const std::optional<Scalar>& c, const std::optional<Scalar>& d);

struct PointSimplex {
  QuadSpace space;
  Scalar vol_scale;
  std::vector<Vector> points;

  std::size_t dim() const { return space.dim(); }
  int weight() const { return static_cast<int>(space.dim() + 1) / 2; }
  VolumeForm vol() const { return VolumeForm(space, vol_scale); }
};

Scalar volume(const PointSimplex& s);
// Every face of dimension >= 1 must carry a nondegenerate form. Returns the
// offending vertex set, if any.
std::optional<std::vector<int>> degenerate_face(const PointSimplex& s);
void require_euclidean(const PointSimplex& s);

// Affine hyperplanes a.x = b in a chart of dimension d; d + 1 of them.
struct AffineHyperplane {
  Vector normal;
  Scalar offset;
};
std::vector<Vector> points_from_hyperplanes(const std::vector<AffineHyperplane>& planes);
// Hyperplanes spanned by the facets of a point simplex, facet i omits vertex i.
std::vector<AffineHyperplane> facet_hyperplanes(const std::vector<Vector>& points);

std::vector<std::vector<int>> subsets_of_size(int n, int k);
int permutation_sign(const std::vector<int>& p);

}  // namespace dehnforge
