#include "doctest.h"
#include "dehnforge/classical.hpp"
#include "dehnforge/expression.hpp"
#include "dehnforge/relation.hpp"

using namespace dehnforge;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(Rational(x));
  return v;
}

PointSimplex tetra(std::vector<Vector> pts) { return {QuadSpace::standard(3), Scalar(1), std::move(pts)}; }

}  // namespace

TEST_CASE("dihedral cosines of the right corner") {
  const auto t = tetra({vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  CHECK(dihedral_cos(t, 0, 1) == Scalar(0));
  // between z = 0 and x + y + z = 1
  CHECK(dihedral_cos(t, 1, 2) == parse_expression("sqrt(1/3)"));
}

// positively oriented, so the sign is +
TEST_CASE("regular tetrahedron: 6 edges of length 2 sqrt 2 at arccos(1/3)") {
  const auto t = tetra({vec({1, -1, -1}), vec({1, 1, 1}), vec({-1, 1, -1}), vec({-1, -1, 1})});
  const auto v = classical_dehn_3d({{Scalar(1), t}});
  REQUIRE(v.normalized.pairs.size() == 1);
  CHECK(v.normalized.pairs[0].length == parse_expression("12*sqrt(2)"));
  CHECK(parse_expression(v.normalized.pairs[0].cos_arg) == Scalar(Rational(1, 3)));
  CHECK(v.normalized.basis_certificate.outcome == RelationOutcome::NoRelationUpToHeight);
}

TEST_CASE("a tetrahedron minus itself is zero") {
  const auto t = tetra({vec({0, 0, 0}), vec({2, 0, 0}), vec({0, 3, 0}), vec({1, 1, 5})});
  CHECK(classical_dehn_3d({{Scalar(1), t}, {Scalar(-1), t}}).is_zero());
}

TEST_CASE("find_relation") {
  RelationQuery q;
  q.precision_digits = 60;
  q.height_bound = Integer(1000);
  q.values = {arccos_symbol(Scalar(Rational(1, 2))), pi_symbol()};
  const auto found = find_relation(q);
  REQUIRE(found.outcome == RelationOutcome::RelationFound);
  // 3 arccos(1/2) = pi
  CHECK(found.coefficients[0] * -1 == found.coefficients[1] * 3);
  q.values = {arccos_symbol(Scalar(Rational(1, 3))), pi_symbol()};
  CHECK(find_relation(q).outcome == RelationOutcome::NoRelationUpToHeight);
  CHECK_THROWS(arccos_symbol(Scalar(2)));
}

TEST_CASE("lll_reduce keeps the lattice volume") {
  std::vector<std::vector<Integer>> rows{{1, 0, 0, 12345}, {0, 1, 0, 23456}, {0, 0, 1, 34567}};
  const auto gs = lll_reduce(rows);
  Rational prod(1);
  for (const auto& x : gs) prod *= x;
  // det of the Gram matrix of (I | a) is 1 + |a|^2
  CHECK(prod == Rational(Integer(1) + Integer(12345) * 12345 + Integer(23456) * 23456 + Integer(34567) * 34567));
  Integer first = 0;
  for (const auto& x : rows[0]) first += x * x;
  CHECK(first < Integer(12345) * 12345);
}
