#include "doctest.h"
#include "dehnforge/error.hpp"
#include "dehnforge/kahler.hpp"
#include "dehnforge/multiplicative.hpp"

using namespace dehnforge;

namespace {

const RatFunc t = RatFunc::variable(0);
const RatFunc t1 = RatFunc::variable(1);

std::string sym(const RatFunc& f) {
  const QSum v = multiplicative_vector(Scalar(f));
  REQUIRE(v.size() == 1);
  return v.begin()->first;
}

}  // namespace

TEST_CASE("differentials and dlog") {
  const OmegaForm d = OmegaForm::differential(t * t);
  CHECK(d.coefficient({0}) == RatFunc(2) * t);
  CHECK(OmegaForm::dlog(t * t).coefficient({0}) == RatFunc(2) / t);
  const OmegaForm a = wedge(OmegaForm::differential(t), OmegaForm::differential(t1));
  const OmegaForm b = wedge(OmegaForm::differential(t1), OmegaForm::differential(t));
  CHECK(a == b.scaled(RatFunc(-1)));
  CHECK(wedge(OmegaForm::differential(t), OmegaForm::differential(t)).is_zero());
}

TEST_CASE("dlog_map on symbols") {
  // t (x) t^2 -> 2 dt
  const TensorElement x(sym(t), Scalar(t * RatFunc(2)));
  const OmegaForm w = dlog_map(x);
  CHECK(w.degree() == 1);
  CHECK(w.coefficient({0}) == RatFunc(2));
  // t t1 (x) t ^ t1 -> dt ^ dt1
  const TensorElement y(sym(t) + std::string(1, kWedgeSep) + sym(t1), Scalar(t * t1));
  CHECK(dlog_map(y).coefficient({0, 1}) == RatFunc(1));
  // prime symbols are constants
  CHECK(dlog_map(TensorElement("F|p:2", Scalar(t))).is_zero());
}

TEST_CASE("dlog_map outside Q(t1..tk)") {
  CHECK_THROWS_AS(dlog_map(TensorElement("q:-1:5", Scalar(1))), Error);
  CHECK_THROWS_AS(dlog_map(TensorElement("p:2", Scalar(1)) + TensorElement("p:2&p:3", Scalar(1))), Error);
}
