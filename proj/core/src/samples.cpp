#include "dehnforge/samples.hpp"

#include <random>
#include <set>

#include "dehnforge/error.hpp"
#include "dehnforge/multiplicative.hpp"
#include "dehnforge/ratfunc.hpp"

namespace dehnforge {

SampleField sample_field_from_string(const std::string& s) {
  if (s == "Q" || s == "q" || s == "rationals") return SampleField::Rationals;
  if (s == "Q(t)" || s == "q(t)" || s == "Qt" || s == "rational-functions") return SampleField::RationalFunctions;
  if (s == "Q(t,t1)" || s == "q(t,t1)") return SampleField::TwoVariables;
  throw Error(ErrorCode::InvalidInput, "unknown field " + s, s);
}

std::vector<Scalar> sample_arguments(SampleField field, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-9, 9);
  std::uniform_int_distribution<long> pos(1, 12);
  std::vector<Scalar> out;
  std::set<std::string> seen;
  const RatFunc t = RatFunc::variable(0);
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 1000 * (count + 10)) throw Error(ErrorCode::InvalidInput, "could not draw enough distinct samples");
    Scalar x;
    if (field == SampleField::Rationals) {
      Rational q(small(rng) * pos(rng), pos(rng));
      q.canonicalize();
      x = Scalar(q);
    } else if (field == SampleField::TwoVariables) {
      // c * (t - a) * (t1 - b) / (t - e), one factor possibly dropped.
      const RatFunc t1 = RatFunc::variable(1);
      const long c = small(rng);
      if (c == 0) continue;
      RatFunc f = RatFunc(Rational(c));
      const auto shape = rng() % 4;
      if (shape != 1) f = f * (t - RatFunc(Rational(small(rng))));
      if (shape != 2) f = f * (t1 - RatFunc(Rational(small(rng))));
      if (shape == 3) f = f / (t - RatFunc(Rational(small(rng))));
      x = Scalar(f);
      if (x.is_zero() || x == Scalar(1)) continue;
      try {
        multiplicative_vector(x);
        multiplicative_vector(Scalar(1) - x);
      } catch (const Error&) {
        continue;
      }
    } else {
      // c * (t - a)^e / (t - b) with small integers.
      const long a = small(rng);
      long b = small(rng);
      if (b == a) b = a + 1;
      const long c = small(rng);
      if (c == 0) continue;
      RatFunc num = t - RatFunc(Rational(a));
      if (rng() % 3 == 0) num = num * num;
      RatFunc f = RatFunc(Rational(c)) * num;
      if (rng() % 2 == 0) f = f / (t - RatFunc(Rational(b)));
      x = Scalar(f);
    }
    if (x.is_zero() || x == Scalar(1)) continue;
    if (seen.insert(x.to_string()).second) out.push_back(x);
  }
  return out;
}

PointSimplex random_point_simplex(int weight, std::uint64_t seed) {
  if (weight < 1) throw Error(ErrorCode::InvalidInput, "weight must be positive");
  const std::size_t d = static_cast<std::size_t>(2 * weight - 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-9, 9);
  for (;;) {
    PointSimplex s{QuadSpace::standard(d), Scalar(1), {}};
    for (std::size_t i = 0; i <= d; ++i) {
      Vector v(d);
      for (auto& x : v) x = Scalar(coord(rng));
      s.points.push_back(std::move(v));
    }
    if (!volume(s).is_zero()) return s;
  }
}

std::vector<PointSimplex> random_point_simplices(int weight, std::size_t count, std::uint64_t seed) {
  std::vector<PointSimplex> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_point_simplex(weight, seed + i));
  return out;
}

}  // namespace dehnforge
