#include <algorithm>
#include <random>

#include "doctest.h"
#include "dehnforge/qeps.hpp"
#include "dense_oracle.hpp"

using namespace dehnforge;

namespace {

EpsObject object(std::size_t d0, std::size_t d1, const std::string& tag = "") {
  EpsObject v;
  for (std::size_t i = 0; i < d0; ++i) v.v0.add_generator(tag + "x" + std::to_string(i));
  for (std::size_t i = 0; i < d1; ++i) v.v1.add_generator(tag + "e" + std::to_string(i));
  return v;
}

// Leibniz expansion of d on a wedge word, done letter by letter with explicit
// transposition counting.
QSum leibniz(const std::vector<std::string>& word, const std::map<std::string, QSum>& delta) {
  QSum out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto it = delta.find(word[i]);
    if (it == delta.end()) continue;
    for (const auto& [k, c] : it->second) {
      const auto ab = split_key(k, kWedgeSep);
      std::vector<std::string> w;
      for (std::size_t j = 0; j < word.size(); ++j) {
        if (j == i) {
          w.push_back(ab[0]);
          w.push_back(ab[1]);
        } else {
          w.push_back(word[j]);
        }
      }
      int sign = (i % 2 == 0) ? 1 : -1;
      bool repeated = false;
      for (std::size_t x = 0; x < w.size(); ++x)
        for (std::size_t y = x + 1; y < w.size(); ++y) {
          if (w[x] == w[y]) repeated = true;
          if (w[x] > w[y]) sign = -sign;
        }
      if (repeated) continue;
      std::sort(w.begin(), w.end());
      out.add(join_keys(w, kWedgeSep), c * sign);
    }
  }
  return out;
}

struct RandomData {
  std::map<std::string, QSum> delta;
  std::map<std::string, QSum> nu;
};

RandomData random_coalgebra(std::mt19937_64& rng, bool valid) {
  std::uniform_int_distribution<long> v(1, 6);
  const long r = v(rng), s = v(rng), s2 = v(rng), y = v(rng), z = v(rng);
  RandomData d;
  d.delta["c"] = QSum("a&b", r);
  d.nu["e2"] = QSum("a|e1", s) + QSum("b|e1", s2);
  Rational x = Rational(y * s2 - z * s) / r;
  if (!valid) x += 1;
  d.nu["e3"] = QSum("c|e1", x) + QSum("a|e2", y) + QSum("b|e2", z);
  return d;
}

const std::map<std::string, int> kL0{{"a", 1}, {"b", 1}, {"c", 2}};
const std::map<std::string, int> kL1{{"e1", 1}, {"e2", 2}, {"e3", 3}};

}  // namespace

TEST_CASE("eps_tensor dimensions") {
  CHECK(eps_tensor(object(2, 1), object(3, 2, "w")).dims() == std::pair<std::size_t, std::size_t>{6, 7});
  CHECK(eps_tensor(object(2, 0), object(3, 0, "w")).dims() == std::pair<std::size_t, std::size_t>{6, 0});
  CHECK(eps_tensor(object(0, 2), object(0, 3, "w")).dims() == std::pair<std::size_t, std::size_t>{0, 0});
  std::mt19937_64 rng(100);
  std::uniform_int_distribution<std::size_t> d(0, 6);
  for (int i = 0; i < 100; ++i)
    CHECK(eps_tensor(object(0, d(rng)), object(0, d(rng), "w")).dims() == std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("eps_tensor is associative up to rebasing") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> d(0, 3);
  for (int i = 0; i < 20; ++i) {
    const auto u = object(d(rng), d(rng), "u");
    const auto v = object(d(rng), d(rng), "v");
    const auto w = object(d(rng), d(rng), "w");
    const auto left = eps_tensor(eps_tensor(u, v), w);
    const auto right = eps_tensor(u, eps_tensor(v, w));
    CHECK(left.dims() == right.dims());
    const auto a = associator(u, v, w);
    std::set<std::string> hit0, hit1;
    for (const auto& g : left.v0.generators()) {
      const auto img = a.f0(g);
      REQUIRE(img.size() == 1);
      CHECK(right.v0.has_generator(img.begin()->first));
      hit0.insert(img.begin()->first);
    }
    for (const auto& g : left.v1.generators()) {
      const auto img = a.f1(g);
      REQUIRE(img.size() == 1);
      CHECK(right.v1.has_generator(img.begin()->first));
      hit1.insert(img.begin()->first);
    }
    CHECK(hit0.size() == right.v0.generators().size());
    CHECK(hit1.size() == right.v1.generators().size());
  }
}

TEST_CASE("eps_exterior") {
  CHECK(eps_exterior(object(2, 1), 2).dims() == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(eps_exterior(object(2, 1), 3).dims() == std::pair<std::size_t, std::size_t>{0, 1});
  const auto v = object(3, 2);
  CHECK(eps_exterior(v, 1).dims() == v.dims());
  CHECK(brute_exterior(2, 1, 2) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(brute_exterior(2, 1, 3) == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("eps_exterior matches the closed form and the dense antisymmetrizer") {
  for (long d0 = 0; d0 <= 4; ++d0)
    for (long d1 = 0; d1 <= 4; ++d1)
      for (int n = 1; n <= 4; ++n) {
        const auto dims = eps_exterior(object(static_cast<std::size_t>(d0), static_cast<std::size_t>(d1)), n).dims();
        CHECK(dims.first == static_cast<std::size_t>(binom(d0, n)));
        CHECK(dims.second == static_cast<std::size_t>(binom(d0, n - 1) * d1));
        if (d0 <= 3 && d1 <= 2 && n <= 3)
          CHECK(brute_exterior(static_cast<std::size_t>(d0), static_cast<std::size_t>(d1), n) == dims);
      }
}

TEST_CASE("split_components and Hom composition") {
  const EpsElement x{QSum("a", 2), QSum("b", 3)};
  const auto [p0, p1] = split_components(x);
  CHECK(p0 == QSum("a", 2));
  CHECK(p1 == QSum("b", 3));
  CHECK(assemble(p0, p1) == x);
  const auto [z0, z1] = split_components(EpsElement{});
  CHECK(z0.is_zero());
  CHECK(z1.is_zero());

  EpsMorphism f{[](const std::string& k) { return QSum(k + "'", 2); },
                [](const std::string& k) { return QSum(k + "'", 5); }};
  EpsMorphism g{[](const std::string& k) { return QSum(k + "\"", 3); },
                [](const std::string& k) { return QSum(k + "\"", 7); }};
  const auto gf = compose(g, f)(x);
  CHECK(gf.part0 == g(EpsElement{f.f0("a").scaled(2), {}}).part0);
  CHECK(gf.part0 == QSum("a'\"", 12));
  CHECK(gf.part1 == QSum("b'\"", 105));
  CHECK(compose(identity_morphism(), f)(x) == f(x));
}

TEST_CASE("abelian coalgebra has zero differentials") {
  const EpsLieCoalgebra l(kL0, kL1, {}, {});
  const auto cx = l.cochain_complex(3, 3);
  for (int k = 1; k < 3; ++k)
    for (const auto& g : cx.total.term(k).generators()) CHECK(cx.total.differential(k)(QSum(g)).is_zero());
}

TEST_CASE("random coalgebras: d^2 = 0 and agreement with Leibniz expansion") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const auto data = random_coalgebra(rng, true);
    const EpsLieCoalgebra l(kL0, kL1, data.delta, data.nu);
    for (int weight = 2; weight <= 4; ++weight) {
      const auto cx = l.cochain_complex(weight, 3);
      CHECK_NOTHROW(cx.total.verify());
      for (int k = 1; k <= 2; ++k)
        for (const auto& g : cx.plain.term(k).generators())
          CHECK(l.d_plain(g) == leibniz(split_key(g, kWedgeSep), data.delta));
    }
  }
}

TEST_CASE("invalid coaction data is rejected") {
  std::mt19937_64 rng(43);
  const auto data = random_coalgebra(rng, false);
  try {
    EpsLieCoalgebra l(kL0, kL1, data.delta, data.nu);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACoalgebra);
    CHECK(e.witness() == "e3");
  }
}

TEST_CASE("total complex splits block-diagonally") {
  std::mt19937_64 rng(44);
  const auto data = random_coalgebra(rng, true);
  const EpsLieCoalgebra l(kL0, kL1, data.delta, data.nu);
  const auto cx = l.cochain_complex(4, 3);
  for (int k = 1; k <= 2; ++k) {
    CHECK(cx.total.term(k).generators().size() ==
          cx.plain.term(k).generators().size() + cx.eps.term(k).generators().size());
    for (const auto& g : cx.total.term(k).generators())
      for (const auto& [key, c] : cx.total.differential(k)(QSum(g))) CHECK(key[0] == g[0]);
    for (int deg = 1; deg <= 3; ++deg)
      CHECK(cx.total.homology(deg).dimension ==
            cx.plain.homology(deg).dimension + cx.eps.homology(deg).dimension);
  }
}
