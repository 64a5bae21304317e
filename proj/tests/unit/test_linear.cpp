#include <random>

#include "doctest.h"
#include "dehnforge/complex.hpp"
#include "dehnforge/expression.hpp"
#include "dehnforge/tensor.hpp"
#include "dense_oracle.hpp"

using namespace dehnforge;

namespace {

Scalar P(const char* s) { return parse_expression(s); }

PresentedSpace<Rational> free_space(int n, const std::string& prefix = "g") {
  std::vector<std::string> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(prefix + std::to_string(i));
  return PresentedSpace<Rational>(gens);
}

RawTensor pure(const Scalar& a, const Scalar& b) {
  return {1, {{SlotKind::Additive, {a}}, {SlotKind::Multiplicative, {b}}}};
}

}  // namespace

TEST_CASE("canonical_form") {
  PresentedSpace<Rational> s({"g1", "g2"}, {QSum("g1") - QSum("g2")});
  CHECK(s.canonical_form(QSum("g1") - QSum("g2")).is_zero());
  PresentedSpace<Rational> f({"g1", "g2"});
  CHECK(f.canonical_form(QSum("g1", 2)) == QSum("g1", 2));
  CHECK_THROWS_AS(f.canonical_form(QSum("g3")), Error);
}

TEST_CASE("canonical_form is a projection") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-5, 5);
  auto s = free_space(8);
  for (int r = 0; r < 4; ++r) {
    QSum rel;
    for (int i = 1; i <= 8; ++i) rel.add("g" + std::to_string(i), c(rng));
    s.add_relation(rel);
  }
  for (int trial = 0; trial < 200; ++trial) {
    QSum x;
    for (int i = 1; i <= 8; ++i) x.add("g" + std::to_string(i), c(rng));
    const QSum once = s.canonical_form(x);
    CHECK(s.canonical_form(once) == once);
    for (const auto& rel : s.relations()) CHECK(s.canonical_form(x + rel.scaled(3)) == once);
  }
}

TEST_CASE("kernel_basis") {
  auto src = free_space(3);
  auto dst = free_space(3, "h");
  LinearMap<Rational> zero{&src, &dst, [](const std::string&) { return QSum(); }};
  CHECK(kernel_basis(zero).size() == 3);
  auto same = free_space(3);
  LinearMap<Rational> id{&src, &same, [](const std::string& g) { return QSum(g); }};
  CHECK(kernel_basis(id).empty());

  auto big = free_space(20);
  auto tiny = free_space(1, "h");
  LinearMap<Rational> f{&big, &tiny, [](const std::string&) { return QSum("h1"); }};
  CHECK_THROWS_AS(kernel_basis(f, 10), Error);
}

TEST_CASE("kernel_basis agrees with dense elimination") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 6, m = 4;
    auto src = free_space(n);
    auto dst = free_space(m, "h");
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m), std::vector<Rational>(n));
    std::map<std::string, QSum> images;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < m; ++i) {
        const long v = trial % 3 == 0 && i > 1 ? 0 : c(rng);
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        images["g" + std::to_string(j + 1)].add("h" + std::to_string(i + 1), v);
      }
    LinearMap<Rational> f{&src, &dst, [&](const std::string& g) { return images[g]; }};
    const auto ker = kernel_basis(f);
    CHECK(ker.size() == static_cast<std::size_t>(n) - dense_rank(a));
    for (const auto& v : ker) CHECK(f(v).is_zero());
  }
}

TEST_CASE("homology of small complexes") {
  FiniteComplex<Rational> id(0);
  id.add_term(PresentedSpace<Rational>({"a"}));
  id.add_term(PresentedSpace<Rational>({"b"}));
  id.set_differential(0, [](const std::string&) { return QSum("b"); });
  CHECK(id.homology(0).dimension == 0);
  CHECK(id.homology(1).dimension == 0);

  FiniteComplex<Rational> zero(0);
  zero.add_term(free_space(2));
  zero.add_term(free_space(3, "h"));
  CHECK(zero.homology(0).dimension == 2);
  CHECK(zero.homology(1).dimension == 3);
  CHECK(zero.homology(1).representatives.size() == 3);
}

TEST_CASE("homology reports d^2 != 0") {
  FiniteComplex<Rational> bad(1);
  bad.add_term(PresentedSpace<Rational>({"a"}));
  bad.add_term(PresentedSpace<Rational>({"b"}));
  bad.add_term(PresentedSpace<Rational>({"c"}));
  bad.set_differential(1, [](const std::string&) { return QSum("b"); });
  bad.set_differential(2, [](const std::string&) { return QSum("c"); });
  try {
    bad.homology(2);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAComplex);
    CHECK(e.witness() == "a");
  }
}

TEST_CASE("tensor_normalize") {
  CHECK(tensor_normalize({pure(3, 4)}) == tensor_normalize({pure(3, 2)}).scaled(2));
  const RawTensor aa{1, {{SlotKind::Additive, {P("5")}}, {SlotKind::Exterior, {P("3"), P("3")}}}};
  CHECK(tensor_normalize({aa}).is_zero());
  const auto lhs = tensor_normalize({pure(P("t"), P("(t - 1)*t^2"))});
  const auto rhs = tensor_normalize({pure(P("t"), P("t - 1"))}) + tensor_normalize({pure(P("t"), P("t"))}).scaled(2);
  CHECK(lhs == rhs);
  CHECK_THROWS_AS(tensor_normalize({pure(1, 0)}), Error);
  const RawTensor ab{1, {{SlotKind::Exterior, {P("2"), P("3")}}}};
  const RawTensor ba{1, {{SlotKind::Exterior, {P("3"), P("2")}}}};
  CHECK(tensor_normalize({ab, ba}).is_zero());
}

TEST_CASE("tensor_normalize is bilinear in multiplicative slots") {
  std::mt19937_64 rng(500);
  std::uniform_int_distribution<long> v(1, 40);
  std::uniform_int_distribution<int> s(0, 1);
  const Scalar t = P("t");
  for (int i = 0; i < 500; ++i) {
    Scalar a(v(rng)), b(v(rng)), c(v(rng));
    if (s(rng)) b = -b;
    if (i % 2 == 1) {
      a = a * t;
      b = b * (t - Scalar(v(rng)));
      c = c * t * t + Scalar(1);
    }
    CHECK(tensor_normalize({pure(a, b * c)}) == tensor_normalize({pure(a, b), pure(a, c)}));
  }
}
