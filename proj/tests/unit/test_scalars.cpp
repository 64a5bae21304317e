#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include "doctest.h"
#include "dehnforge/embed.hpp"
#include "dehnforge/error.hpp"
#include "dehnforge/expression.hpp"
#include "dehnforge/multiplicative.hpp"
#include "dehnforge/scalar.hpp"

using namespace dehnforge;

namespace {

Scalar P(const char* s) { return parse_expression(s); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidInput;
}

// Square roots in Q(sqrt(d)) by solving (a + b sqrt(d))^2 = x coordinate-wise:
// 2ab = 0 forces a = 0 or b = 0.
std::optional<TowerElement> quadratic_sqrt_oracle(const Rational& x, const Integer& d) {
  const auto rational_sqrt = [](const Rational& q) -> std::optional<Rational> {
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) || !mpz_perfect_square_p(q.get_den().get_mpz_t()))
      return std::nullopt;
    return Rational(sqrt(q.get_num()), sqrt(q.get_den()));
  };
  if (auto a = rational_sqrt(x)) return TowerElement(*a);
  if (auto b = rational_sqrt(x / d)) return TowerElement::sqrt_radicand(d).scaled(*b);
  return std::nullopt;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

TowerElement random_tower(std::mt19937_64& rng) {
  TowerElement x(random_rational(rng));
  for (long m : {2L, 3L, 6L}) x += TowerElement::sqrt_radicand(m).scaled(random_rational(rng));
  return x;
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
  const RatFunc t = RatFunc::variable(0);
  RatFunc num(random_rational(rng));
  RatFunc den(1);
  std::uniform_int_distribution<int> deg(0, 2);
  RatFunc p = t;
  for (int i = 0; i < 2; ++i, p = p * t) num = num + p * RatFunc(random_rational(rng));
  if (deg(rng) > 0) den = t - RatFunc(Rational(deg(rng)));
  return num / den;
}

template <class T>
void check_field_axioms(const T& a, const T& b, const T& c) {
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a - a == T(0));
  if (!(b == T(0))) CHECK((a / b) * b == a);
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(P("1/3 + 1/6") == Scalar(Rational(1, 2)));
  CHECK(arith(Scalar(Rational(1, 3)), Scalar(Rational(1, 6)), ArithOp::Add) == Scalar(Rational(1, 2)));
  CHECK(code_of([] { arith(Scalar(1), Scalar(0), ArithOp::Div); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("tower arithmetic") {
  CHECK(P("sqrt(2)*sqrt(2)") == Scalar(2));
  CHECK(P("sqrt(2)*sqrt(3)") == P("sqrt(6)"));
  CHECK(P("(1 + sqrt(2)) / (1 + sqrt(2))") == Scalar(1));
  CHECK(P("1/(sqrt(2) + sqrt(3))") == P("sqrt(3) - sqrt(2)"));
  CHECK(code_of([] { P("t*sqrt(2)"); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("rational function arithmetic") {
  CHECK(P("(t^2 - 1)/(t - 1)") == P("t + 1"));
  CHECK(P("t1/t2 * t2/t1") == Scalar(1));
  CHECK(P("(t1^2 - t2^2)/(t1 + t2)") == P("t1 - t2"));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 1000; ++i) {
    check_field_axioms(random_rational(rng), random_rational(rng), random_rational(rng));
    check_field_axioms(random_tower(rng), random_tower(rng), random_tower(rng));
    check_field_axioms(random_ratfunc(rng), random_ratfunc(rng), random_ratfunc(rng));
  }
}

TEST_CASE("adjoin_sqrt") {
  const TowerField q;
  auto a = adjoin_sqrt(q, TowerElement(9));
  CHECK(a.field == q);
  REQUIRE(a.witness);
  CHECK(*a.witness == TowerElement(3));

  auto b = adjoin_sqrt(q, TowerElement(2));
  CHECK(b.field.degree() == 2);
  CHECK(!b.witness);

  auto c = adjoin_sqrt(b.field, TowerElement(8));
  CHECK(c.field == b.field);
  REQUIRE(c.witness);
  const auto oracle = quadratic_sqrt_oracle(8, 2);
  REQUIRE(oracle);
  CHECK(*c.witness * *c.witness == TowerElement(8));
  CHECK((*c.witness == *oracle || *c.witness == -*oracle));
  CHECK(*c.witness == TowerElement::sqrt_radicand(2).scaled(2));

  auto twice = adjoin_sqrt(b.field, TowerElement(2));
  CHECK(twice.field == b.field);

  CHECK(code_of([&] { adjoin_sqrt(q, TowerElement(-3)); }) == ErrorCode::NegativeRadicand);
  CHECK(adjoin_sqrt(q, TowerElement(-3), true).field.degree() == 2);
}

TEST_CASE("square detection agrees with coordinate solving") {
  for (long x = -30; x <= 30; ++x)
    for (long d : {2L, 3L, 5L}) {
      if (x == 0) continue;
      const auto got = sqrt_in_field(TowerElement(x), {Integer(d)});
      const auto want = quadratic_sqrt_oracle(x, d);
      CHECK(got.has_value() == want.has_value());
      if (got) CHECK(*got * *got == TowerElement(x));
    }
}

TEST_CASE("embed_float") {
  auto third = embed_float(TowerElement(Rational(1, 3)), 64);
  Mpfr exact(256);
  mpfr_set_q(exact.get(), Rational(1, 3).get_mpq_t(), MPFR_RNDN);
  Mpfr err(256);
  mpfr_sub(err.get(), third.value.get(), exact.get(), MPFR_RNDN);
  mpfr_abs(err.get(), err.get(), MPFR_RNDN);
  CHECK(mpfr_cmp_d(err.get(), std::ldexp(1.0, -64)) < 0);
  CHECK(mpfr_cmp_q(third.interval.lo.get(), Rational(1, 3).get_mpq_t()) <= 0);
  CHECK(mpfr_cmp_q(third.interval.hi.get(), Rational(1, 3).get_mpq_t()) >= 0);

  auto r2 = embed_float(TowerElement::sqrt_radicand(2), 128);
  Mpfr ref(400);
  mpfr_sqrt_ui(ref.get(), 2, MPFR_RNDN);
  mpfr_sub(ref.get(), ref.get(), r2.value.get(), MPFR_RNDN);
  mpfr_abs(ref.get(), ref.get(), MPFR_RNDN);
  Mpfr bound(400);
  mpfr_set_ui_2exp(bound.get(), 1, -128, MPFR_RNDN);
  CHECK(mpfr_cmp(ref.get(), bound.get()) < 0);

  CHECK(code_of([] { embed_float(P("t/(t-1)"), 64); }) == ErrorCode::NotEmbeddable);
}

TEST_CASE("factor_multiplicative") {
  auto f12 = factor_multiplicative(Scalar(12));
  CHECK(f12.sign == 1);
  CHECK(f12.factors == std::vector<std::pair<std::string, long>>{{"p:2", 2}, {"p:3", 1}});

  auto f49 = factor_multiplicative(Scalar(Rational(-4, 9)));
  CHECK(f49.sign == -1);
  CHECK(f49.factors == std::vector<std::pair<std::string, long>>{{"p:2", 2}, {"p:3", -2}});

  auto ft = factor_multiplicative(P("(t^2 - 1)/t"));
  CHECK(ft.sign == 1);
  std::map<std::string, long> got(ft.factors.begin(), ft.factors.end());
  CHECK(got == std::map<std::string, long>{{"f:t", -1}, {"f:t + 1", 1}, {"f:t - 1", 1}});

  CHECK(code_of([] { factor_multiplicative(Scalar(0)); }) == ErrorCode::ZeroElement);
  CHECK(code_of([] { factor_multiplicative(P("sqrt(2)")); }) == ErrorCode::UnsupportedField);
}

TEST_CASE("factorization round-trips") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const RatFunc x = random_ratfunc(rng);
    if (x.is_zero()) continue;
    const auto f = factor_multiplicative(Scalar(x));
    Scalar back(f.sign);
    for (const auto& [s, e] : f.factors) {
      const Scalar base = symbol_value(s);
      for (long k = 0; k < std::abs(e); ++k) back = e > 0 ? back * base : back / base;
    }
    CHECK(back == Scalar(x));
  }
}

TEST_CASE("multiplicative vectors in imaginary quadratic fields") {
  const Scalar a = P("2 + sqrt(-1)");
  const Scalar abar = P("2 - sqrt(-1)");
  const QSum va = multiplicative_vector(a);
  CHECK(va + multiplicative_vector(abar) == multiplicative_vector(Scalar(5)));
  CHECK(multiplicative_vector(a * a) == va.scaled(2));
  CHECK(multiplicative_vector(P("sqrt(-1)")).is_zero());
  CHECK(multiplicative_vector(a / abar) == va.scaled(2) - multiplicative_vector(Scalar(5)));
  CHECK(!(va == multiplicative_vector(abar)));
  CHECK(code_of([] { multiplicative_vector(Scalar(0)); }) == ErrorCode::ZeroInMultiplicativeSlot);
}

TEST_CASE("parse errors report position") {
  try {
    P("1 + * 2");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.witness() == "4");
  }
  CHECK(code_of([] { P("sqrt(1 + sqrt(2))"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { P("x + 1"); }) == ErrorCode::ParseError);
}
