#include <map>
#include <set>

#include "doctest.h"
#include "dehnforge/cathelineau.hpp"
#include "dehnforge/error.hpp"
#include "dense_oracle.hpp"

using namespace dehnforge;

namespace {

Scalar q(long a, long b = 1) { return Scalar(Rational(a, b)); }

// p-adic valuations of a nonzero rational by trial division.
std::map<long, long> valuations(const mpq_class& x) {
  std::map<long, long> out;
  auto run = [&](mpz_class n, long sign) {
    if (n < 0) n = -n;
    for (long p = 2; n > 1; ++p)
      while (n % p == 0) {
        n /= p;
        out[p] += sign;
      }
  };
  run(x.get_num(), 1);
  run(x.get_den(), -1);
  return out;
}

// Kernel dimension of <x> -> x (x) v(1-x) and (1-x) (x) v(x), two parts apart.
std::size_t dense_kernel_dim(const std::vector<mpq_class>& args) {
  std::map<std::string, std::size_t> col;
  std::vector<std::map<std::string, mpq_class>> rows;
  for (const auto& x : args) {
    std::map<std::string, mpq_class> r;
    const mpq_class y = 1 - x;
    for (const auto& [p, v] : valuations(y)) r["L" + std::to_string(p)] += x * v;
    for (const auto& [p, v] : valuations(x)) r["R" + std::to_string(p)] += y * v;
    for (const auto& [k, c] : r) col.emplace(k, col.size());
    rows.push_back(r);
  }
  std::vector<std::vector<mpq_class>> a(rows.size(), std::vector<mpq_class>(col.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [k, c] : rows[i]) a[i][col[k]] = c;
  return args.size() - dense_rank(a);
}

}  // namespace

TEST_CASE("delta at weight 2") {
  const auto d = cathelineau_delta(q(2), 2);
  // 1 - 2 = -1 is torsion
  CHECK(d.first.is_zero());
  CHECK(d.second == TensorElement("p:2", q(-1)));
  const auto h = cathelineau_delta(q(1, 2), 2);
  CHECK(h.first == TensorElement("p:2", q(-1, 2)));
  CHECK(h.second == TensorElement("p:2", q(-1, 2)));
  CHECK_THROWS_AS(cathelineau_delta(q(1), 2), Error);
  CHECK_THROWS_AS(cathelineau_delta(q(0), 2), Error);
}

TEST_CASE("kernel of delta_2 against a dense oracle") {
  const std::vector<mpq_class> raw{2, 3, mpq_class(1, 2), mpq_class(2, 3), -1, 4};
  std::vector<Scalar> gens;
  for (const auto& x : raw) gens.emplace_back(Rational(x));
  CHECK(cathelineau_kernel(2, gens).size() == dense_kernel_dim(raw));
}

TEST_CASE("weight 3 complex shape") {
  const std::vector<Scalar> gens{q(2), q(3), q(1, 2), q(-1), q(5, 3)};
  const auto w = build_cathelineau_complex(3, gens);
  REQUIRE(w.cx.first_degree() == 1);
  REQUIRE(w.cx.last_degree() == 3);
  CHECK(w.term_sizes()[0] == gens.size());
  std::set<char> middle;
  for (const auto& g : w.cx.term(2).generators()) middle.insert(g[0]);
  CHECK(middle == std::set<char>{'b', 'B'});
  for (const auto& g : w.cx.term(3).generators()) CHECK(g.rfind("F|", 0) == 0);
}

TEST_CASE("five-term relation under both structures") {
  for (const auto& b : {compatible_b_structure(), standard_b_structure()}) {
    CHECK(b2_coproduct(five_term_element(q(3), q(-2, 7)), b).is_zero());
    CHECK(b2_coproduct(five_term_element(q(5, 4), q(9)), b).is_zero());
  }
  CHECK_THROWS_AS(b_structure_by_name("other"), Error);
}

TEST_CASE("the standard structure breaks d^2 in weight 4") {
  const std::vector<Scalar> gens{q(2), q(3), q(1, 2)};
  CHECK_NOTHROW(build_cathelineau_complex(4, gens, compatible_b_structure()));
  try {
    build_cathelineau_complex(4, gens, standard_b_structure());
    FAIL("expected NotAComplex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAComplex);
  }
}

TEST_CASE("additive complex is the direct sum of its summands") {
  const std::vector<Scalar> gens{q(2), q(3), q(-1), q(1, 3)};
  const auto a = build_additive_complex(3, gens);
  REQUIRE(a.summands.size() == 3);
  for (int k = 1; k <= 3; ++k) {
    std::size_t sum = 0;
    for (const auto& s : a.summands)
      if (s.cx.has_degree(k)) sum += s.cx.term(k).generators().size();
    CHECK(a.total.cx.term(k).generators().size() == sum);
  }
}
