#include <random>

#include "doctest.h"
#include "dehnforge/dehn.hpp"
#include "dehnforge/error.hpp"
#include "dehnforge/expression.hpp"
#include "dehnforge/samples.hpp"

using namespace dehnforge;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(Rational(x));
  return v;
}

PointSimplex corner() {
  return {QuadSpace::standard(3), Scalar(1), {vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}};
}

}  // namespace

TEST_CASE("right corner: unit edges meet at right angles") {
  const DehnTensor d = euclidean_dehn(corner());
  CHECK(d.weight == 2);
  std::size_t unit = 0;
  for (const auto& t : d.terms) {
    if (t.k != 1) continue;
    if (t.e_value == Scalar(1)) {
      // a right angle has cross-ratio e^(2i pi/2) = -1
      CHECK(t.s_value == Scalar(-1));
      ++unit;
    } else {
      CHECK(t.e_value == parse_expression("sqrt(2)"));
    }
  }
  CHECK(unit == 3);
}

TEST_CASE("E_1 and S_1 keys") {
  const PointSimplex g = corner();
  CHECK(symbol_weight(e_symbol(g).key) == 2);
  const PointSimplex edge{QuadSpace::standard(1), Scalar(1), {vec({0}), vec({3})}};
  CHECK(e1_length(edge) == Scalar(3));
}

TEST_CASE("defining relations vanish exactly") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const PointSimplex g = random_point_simplex(2, seed);
    const EnChain skew = relation_skew_volume(g);
    CHECK(vol_hom(skew).is_zero());
    CHECK(euclidean_dehn(skew).is_zero());
    const EnChain perm = relation_permutation(g, {1, 0, 2, 3});
    CHECK(vol_hom(perm).is_zero());
    CHECK(euclidean_dehn(perm).is_zero());
  }
}

TEST_CASE("twist: dilation by 2 scales vol_hom by 2^(2n-1)") {
  const PointSimplex g = random_point_simplex(2, 11);
  const Scalar v = vol_hom({{Scalar(1), g}});
  CHECK(!v.is_zero());
  CHECK(vol_hom({{Scalar(1), dilate(g, Scalar(2))}}) == Scalar(8) * v);
}

TEST_CASE("coassociativity holds and a corrupted partition is caught") {
  const PointSimplex g = random_point_simplex(3, 5);
  CHECK(coassoc_check(g).ok);
  const CheckResult bad = coassoc_check(g, std::vector<int>{0, 1});
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("flat simplices are zero, malformed ones rejected") {
  const PointSimplex flat{QuadSpace::standard(3), Scalar(1), {vec({0, 0, 0}), vec({1, 0, 0}), vec({2, 0, 0}), vec({0, 0, 1})}};
  CHECK(euclidean_dehn(flat).is_zero());
  const PointSimplex three{QuadSpace::standard(3), Scalar(1), {vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0})}};
  CHECK_THROWS_AS(euclidean_dehn(three), Error);
}
