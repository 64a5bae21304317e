#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../unit/dense_oracle.hpp"
#include "criteria.hpp"
#include "dehnforge/cathelineau.hpp"
#include "dehnforge/euclid_complex.hpp"
#include "dehnforge/kahler.hpp"
#include "dehnforge/multiplicative.hpp"
#include "dehnforge/qeps.hpp"
#include "dehnforge/samples.hpp"
#include "dehnforge_app/checks.hpp"

using namespace dehnforge;

namespace acc {

namespace {

constexpr std::uint64_t kSeed = 20240601;

Verdict from(const app::CheckOutcome& c) {
  if (c.ok) return {true, c.name + " x" + std::to_string(c.instances)};
  return {false, c.name + " witness " + c.witness + ": " + c.detail};
}

Verdict all_of(const std::vector<Verdict>& vs) {
  Verdict out;
  for (const auto& v : vs) {
    if (!v.ok) return v;
    out.detail += (out.detail.empty() ? "" : "; ") + v.detail;
  }
  return out;
}

EpsObject object(std::size_t d0, std::size_t d1, const std::string& tag) {
  EpsObject v;
  for (std::size_t i = 0; i < d0; ++i) v.v0.add_generator(tag + "x" + std::to_string(i));
  for (std::size_t i = 0; i < d1; ++i) v.v1.add_generator(tag + "e" + std::to_string(i));
  return v;
}

// Forms over Q(t, t1) kept as index set -> coefficient, built without the
// library's form class or its factorization of arguments.
using Form = std::map<std::vector<int>, RatFunc>;
constexpr int kVars = 2;

void add_to(Form& f, const std::vector<int>& idx, const RatFunc& c) {
  RatFunc& slot = f[idx];
  slot += c;
  if (slot.is_zero()) f.erase(idx);
}

Form wedge(const Form& a, const Form& b) {
  Form out;
  for (const auto& [ia, ca] : a)
    for (const auto& [ib, cb] : b) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      int sign = 1;
      bool repeat = false;
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
          if (idx[i] == idx[j]) repeat = true;
          if (idx[i] > idx[j]) sign = -sign;
        }
      if (repeat) continue;
      std::sort(idx.begin(), idx.end());
      add_to(out, idx, sign > 0 ? ca * cb : -(ca * cb));
    }
  return out;
}

// d f / f by partial derivatives of the raw function.
Form dlog(const RatFunc& f) {
  Form out;
  for (int v = 0; v < kVars; ++v) add_to(out, {v}, f.derivative(v) / f);
  return out;
}

Form scale(const Form& f, const RatFunc& c) {
  Form out;
  for (const auto& [i, x] : f) add_to(out, i, x * c);
  return out;
}

Form plus(Form a, const Form& b) {
  for (const auto& [i, x] : b) add_to(a, i, x);
  return a;
}

struct ParsedGen {
  char kind;
  std::string arg;
  std::vector<std::string> wedge;
};

ParsedGen parse_gen(const std::string& key) {
  ParsedGen p;
  p.kind = key[0];
  const auto bar = key.rfind('|');
  const auto open = key.find(p.kind == 'b' ? '<' : '{');
  p.arg = key.substr(open + 1, bar - open - 2);
  const std::string w = key.substr(bar + 1);
  std::size_t at = 0;
  while (at < w.size()) {
    const auto amp = w.find('&', at);
    p.wedge.push_back(w.substr(at, amp == std::string::npos ? std::string::npos : amp - at));
    if (amp == std::string::npos) break;
    at = amp + 1;
  }
  return p;
}

// dlog of d on a degree n-1 generator of weight <= 3, from the defining
// formulas: d<x>_2 = x (x) (1-x) + (1-x) (x) x and d{x}_2 = -x ^ (1-x).
Form oracle(const ParsedGen& g, const RatFunc& x) {
  const RatFunc y = RatFunc(1) - x;
  Form base = g.kind == 'b' ? plus(scale(dlog(y), x), scale(dlog(x), y)) : scale(wedge(dlog(x), dlog(y)), RatFunc(-1));
  for (const auto& w : g.wedge) base = wedge(base, dlog(symbol_value(w).as_ratfunc()));
  return base;
}

Verdict dlog_case(SampleField field, const std::string& field_name, int n) {
  const auto args = sample_arguments(field, 100, kSeed + static_cast<std::uint64_t>(n));
  std::map<std::string, Scalar> by_name;
  for (const auto& a : args) by_name.emplace(a.to_string(), a);
  const auto w = build_cathelineau_complex(n, args);
  std::vector<std::string> gens = w.cx.term(n - 1).generators();
  std::mt19937_64 rng(kSeed);
  std::shuffle(gens.begin(), gens.end(), rng);
  if (gens.size() > 100) gens.resize(100);
  const auto d = w.cx.differential(n - 1);
  std::size_t nonzero = 0;
  for (const auto& g : gens) {
    const ParsedGen p = parse_gen(g);
    const Form want = oracle(p, by_name.at(p.arg).as_ratfunc());
    const OmegaForm got = dlog_map(d(TensorElement(g)), n - 1);
    Form have;
    for (const auto& [i, c] : got.terms()) add_to(have, i, c);
    if (have != want) return {false, field_name + " weight " + std::to_string(n) + " at " + g + ": " + got.to_string()};
    if (!want.empty()) ++nonzero;
  }
  return {true, field_name + " w" + std::to_string(n) + " " + std::to_string(gens.size()) + " gens (" +
                    std::to_string(nonzero) + " nonzero forms)"};
}

}  // namespace

Verdict criterion_d2() {
  std::vector<Verdict> vs;
  for (SampleField f : {SampleField::Rationals, SampleField::RationalFunctions})
    for (int n = 2; n <= 4; ++n) {
      const auto gens = sample_arguments(f, 200, kSeed + static_cast<std::uint64_t>(n));
      if (gens.size() != 200) return {false, "sampler returned " + std::to_string(gens.size()) + " arguments"};
      vs.push_back(from(app::check_d2(ComplexKind::Cathelineau, n, gens, compatible_b_structure())));
      vs.push_back(from(app::check_d2(ComplexKind::Additive, n, gens, compatible_b_structure())));
      if (!vs.back().ok) return vs.back();
    }
  vs.push_back(from(app::check_euclid_d2(2, 10, kSeed)));
  vs.push_back(from(app::check_euclid_d2(3, 10, kSeed)));
  return all_of(vs);
}

Verdict criterion_qeps() {
  // V1 eps (x) V2 eps = 0
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int i = 0; i < 100; ++i) {
    const auto t = eps_tensor(object(0, dim(rng), "u"), object(0, dim(rng), "v"));
    if (t.dims() != std::pair<std::size_t, std::size_t>{0, 0}) return {false, "eps (x) eps not zero at pair " + std::to_string(i)};
  }
  // exterior powers against the closed form and the dense antisymmetrizer
  std::size_t dense = 0;
  for (std::size_t d0 = 0; d0 <= 4; ++d0)
    for (std::size_t d1 = 0; d1 <= 4; ++d1)
      for (int n = 1; n <= 4; ++n) {
        const auto dims = eps_exterior(object(d0, d1, ""), n).dims();
        const std::pair<std::size_t, std::size_t> closed{
            static_cast<std::size_t>(binom(static_cast<long>(d0), n)),
            static_cast<std::size_t>(binom(static_cast<long>(d0), n - 1) * static_cast<long>(d1))};
        if (dims != closed)
          return {false, "Lambda^" + std::to_string(n) + " of (" + std::to_string(d0) + "," + std::to_string(d1) + ")"};
        // dense rank only where the word count stays small
        std::size_t words = 1;
        for (int k = 0; k < n; ++k) words *= d0 + d1;
        if (words <= 256) {
          if (brute_exterior(d0, d1, n) != dims)
            return {false, "dense oracle at (" + std::to_string(d0) + "," + std::to_string(d1) + ")"};
          ++dense;
        }
      }
  // block-diagonal splitting of the cochain complex
  const std::map<std::string, int> l0{{"a", 1}, {"b", 1}, {"c", 2}};
  const std::map<std::string, int> l1{{"e1", 1}, {"e2", 2}, {"e3", 3}};
  std::uniform_int_distribution<long> v(1, 6);
  for (int trial = 0; trial < 10; ++trial) {
    const long r = v(rng), s = v(rng), s2 = v(rng), y = v(rng), z = v(rng);
    std::map<std::string, QSum> delta{{"c", QSum("a&b", r)}};
    std::map<std::string, QSum> nu{{"e2", QSum("a|e1", s) + QSum("b|e1", s2)}};
    nu["e3"] = QSum("c|e1", Rational(y * s2 - z * s) / r) + QSum("a|e2", y) + QSum("b|e2", z);
    const EpsLieCoalgebra lc(l0, l1, delta, nu);
    const auto cx = lc.cochain_complex(4, 3);
    for (int k = 1; k <= 3; ++k) {
      if (cx.total.term(k).generators().size() !=
          cx.plain.term(k).generators().size() + cx.eps.term(k).generators().size())
        return {false, "split sizes in degree " + std::to_string(k)};
      for (const auto& g : cx.total.term(k).generators())
        for (const auto& [key, c] : cx.total.differential(k)(QSum(g)))
          if (key[0] != g[0]) return {false, "off-diagonal " + g + " -> " + key};
      if (cx.total.homology(k).dimension != cx.plain.homology(k).dimension + cx.eps.homology(k).dimension)
        return {false, "homology does not split in degree " + std::to_string(k)};
    }
  }
  const CheckResult eps = eps_part_agreement(3, random_point_simplices(3, 3, kSeed));
  if (!eps.ok) return {false, "eps-part vs Euclidean complex: " + eps.witness + " " + eps.detail};
  return {true, "100 eps pairs; exterior 100 cases (" + std::to_string(dense) + " dense); split x10; eps-part weight 3"};
}

Verdict criterion_decomposition() {
  std::vector<Verdict> vs;
  for (SampleField f : {SampleField::Rationals, SampleField::RationalFunctions})
    for (int n = 2; n <= 3; ++n)
      vs.push_back(from(app::check_decomposition(n, sample_arguments(f, 50, kSeed + static_cast<std::uint64_t>(n)))));
  return all_of(vs);
}

Verdict criterion_dlog() {
  return all_of({dlog_case(SampleField::RationalFunctions, "Q(t)", 2), dlog_case(SampleField::RationalFunctions, "Q(t)", 3),
                 dlog_case(SampleField::TwoVariables, "Q(t,t1)", 2), dlog_case(SampleField::TwoVariables, "Q(t,t1)", 3)});
}

}  // namespace acc
