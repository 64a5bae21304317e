#include "dehnforge/euclid_complex.hpp"

#include <memory>

#include "dehnforge/error.hpp"
#include "dehnforge/qeps.hpp"

namespace dehnforge {

namespace {

std::string e1_key(const Integer& m) { return "E1:" + m.get_str(); }

Rational rational_of(const Scalar& c, const std::string& where) {
  if (!c.is_rational())
    throw Error(ErrorCode::UnsupportedField, "irrational coefficient " + c.to_string() + " in " + where, where);
  return c.rational_value();
}

// c (x) e with c in E_1 = F, split on the surd basis.
void add_length(QSum& out, const std::string& left, const Scalar& c, const Rational& scale) {
  if (!c.is_tower()) throw Error(ErrorCode::UnsupportedField, "lengths must lie in a quadratic tower", c.to_string());
  for (const auto& [m, q] : c.tower().coords()) out.add(left + kTensorSep + e1_key(m), scale * q);
}

// The truncation: coactions of E generators and cobrackets of Q_2 generators.
struct EuclidState {
  int n = 0;
  std::vector<std::string> top;
  std::map<std::string, QSum> nu;
  std::map<std::string, QSum> delta;
  std::map<std::string, int> l0;
  std::map<std::string, int> l1;
  bool heuristic = false;

  void add_delta(const std::string& q) {
    if (delta.count(q)) return;
    const HyperplaneSimplex rep = s_representative(q);
    const Scalar coef = s_symbol(rep).coefficient;
    const Coproduct cp = sn_coproduct(rep);
    heuristic = heuristic || cp.heuristic;
    QSum img;
    auto it = cp.components.find({1, 1});
    if (it != cp.components.end())
      for (const auto& [k, c] : it->second) {
        const auto parts = split_key(k, kTensorSep);
        if (auto w = wedge_keys(parts.at(0), parts.at(1)))
          img.add(w->second, -rational_of(c / coef, q) * w->first);
      }
    for (const auto& [k, c] : img)
      for (const auto& s : split_key(k, kWedgeSep)) l0.emplace(s, 1);
    l0.emplace(q, 2);
    delta.emplace(q, std::move(img));
  }

  void add_nu(const std::string& e) {
    if (nu.count(e)) return;
    const PointSimplex rep = e_representative(e);
    const Scalar coef = e_symbol(rep).coefficient;
    const DehnTensor dt = euclidean_dehn(rep);
    heuristic = heuristic || dt.heuristic;
    QSum img;
    std::vector<std::string> lower;
    for (const auto& [kl, t] : dt.components) {
      const auto [k, l] = kl;
      for (const auto& [key, c] : t) {
        if (k == 1) {
          if (l >= 2 && s_decomposable(key)) continue;
          add_length(img, key, c / coef, Rational(1));
          l0.emplace(key, l);
          if (l == 2) add_delta(key);
        } else if (l == 1) {
          const auto parts = split_key(key, kTensorSep);
          img.add(parts.at(1) + kTensorSep + parts.at(0), rational_of(c / coef, e));
          l0.emplace(parts.at(1), 1);
          lower.push_back(parts.at(0));
        } else {
          throw Error(ErrorCode::InvalidInput, "weight above 3 is not supported", e);
        }
      }
    }
    for (const auto& [k, c] : img) {
      const std::string f = split_key(k, kTensorSep).at(1);
      l1.emplace(f, f.rfind("E1:", 0) == 0 ? 1 : symbol_weight(f));
    }
    l1[e] = symbol_weight(e);
    nu.emplace(e, std::move(img));
    for (const auto& f : lower) add_nu(f);
  }

  // The differential written out from D^E and the Q_2 cobracket.
  QSum d(const std::string& key) const {
    const auto bar = key.find(kTensorSep);
    if (bar == std::string::npos) return nu.at(key);
    const std::string w = key.substr(0, bar);
    const std::string e = key.substr(bar + 1);
    QSum out;
    if (e.rfind("E1:", 0) == 0) {
      // l (x) q  ->  l (x) delta(q) for the single Q_2 letter.
      if (split_key(w, kWedgeSep).size() == 1 && l0.count(w) && l0.at(w) == 2)
        for (const auto& [k, c] : delta.at(w)) out.add(k + kTensorSep + e, c);
      return out;
    }
    // e (x) s  ->  D^E(e) ^ s.
    for (const auto& [k, c] : nu.at(e)) {
      const auto parts = split_key(k, kTensorSep);
      if (auto rw = wedge_keys(parts.at(0), w)) out.add(rw->second + kTensorSep + parts.at(1), c * rw->first);
    }
    return out;
  }
};

std::shared_ptr<EuclidState> make_euclid_state(int n, const std::vector<PointSimplex>& gens) {
  if (n != 2 && n != 3) throw Error(ErrorCode::InvalidInput, "Euclidean Dehn complexes are built for weights 2 and 3");
  if (gens.empty()) throw Error(ErrorCode::InvalidInput, "empty generator list");
  auto st = std::make_shared<EuclidState>();
  st->n = n;
  for (const auto& g : gens) {
    if (g.weight() != n) throw Error(ErrorCode::MixedWeights, "generator of the wrong weight");
    const Symbol s = e_symbol(g);
    if (s.coefficient.is_zero()) continue;
    if (std::find(st->top.begin(), st->top.end(), s.key) == st->top.end()) st->top.push_back(s.key);
    st->add_nu(s.key);
  }
  return st;
}

}  // namespace

WeightComplex<Rational> build_euclidean_dehn_complex(int n, const std::vector<PointSimplex>& gens, std::size_t cap) {
  const auto st = make_euclid_state(n, gens);
  WeightComplex<Rational> out;
  out.weight = n;
  out.kind = ComplexKind::EuclideanDehn;
  out.twist = n - 1;
  out.cx = FiniteComplex<Rational>(1);
  PresentedSpace<Rational> first;
  for (const auto& k : st->top) first.add_generator(k);
  out.cx.add_term(std::move(first));
  for (int k = 1; k < n; ++k) {
    PresentedSpace<Rational> next;
    for (const auto& g : out.cx.term(k).generators())
      for (const auto& [key, c] : st->d(g)) next.add_generator(key);
    if (next.generators().size() > cap)
      throw Error(ErrorCode::TruncationBlowup,
                  "degree " + std::to_string(k + 1) + " has " + std::to_string(next.generators().size()) +
                      " generators, cap " + std::to_string(cap));
    out.cx.add_term(std::move(next));
    out.cx.set_differential(k, [st](const std::string& g) { return st->d(g); });
  }
  out.heuristic = st->heuristic;
  if (st->top.empty()) out.warnings.push_back("every generator vanishes by symmetry");
  out.cx.verify();
  return out;
}

CheckResult eps_part_agreement(int n, const std::vector<PointSimplex>& gens) {
  const WeightComplex<Rational> euclid = build_euclidean_dehn_complex(n, gens);
  const auto st = make_euclid_state(n, gens);
  const EpsLieCoalgebra coalg(st->l0, st->l1, st->delta, st->nu);
  CheckResult res;
  auto fail = [&](const std::string& g, std::string why) {
    res.ok = false;
    res.witness = g;
    res.detail = std::move(why);
    return res;
  };
  auto eps_key = [](int k, const std::string& g) { return k == 1 ? std::string(1, kTensorSep) + g : g; };
  // Membership in the weight-n, degree-k eps-part: k - 1 distinct L0 letters
  // and one L1 letter.
  auto in_eps_part = [&](int k, const std::string& key) {
    const auto bar = key.find(kTensorSep);
    if (bar == std::string::npos) return false;
    const auto word = split_key(key.substr(0, bar), kWedgeSep);
    auto e = coalg.l1().find(key.substr(bar + 1));
    if (e == coalg.l1().end() || static_cast<int>(word.size()) != k - 1) return false;
    int w = e->second;
    for (const auto& s : word) {
      auto it = coalg.l0().find(s);
      if (it == coalg.l0().end()) return false;
      w += it->second;
    }
    return w == n;
  };
  for (int k = 1; k <= n; ++k)
    for (const auto& g : euclid.cx.term(k).generators())
      if (!in_eps_part(k, eps_key(k, g)))
        return fail(g, "not a generator of the eps-part in degree " + std::to_string(k));
  for (int k = 1; k < n; ++k) {
    const auto de = euclid.cx.differential(k);
    for (const auto& g : euclid.cx.term(k).generators()) {
      QSum lhs;
      for (const auto& [key, c] : de(QSum(g))) lhs.add(eps_key(k + 1, key), c);
      const QSum diff = coalg.d_eps(eps_key(k, g)) - lhs;
      if (!diff.is_zero()) return fail(g, "differentials differ by " + diff.to_string());
    }
  }
  return res;
}

}  // namespace dehnforge
