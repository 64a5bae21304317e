#include <functional>

#include "dehnforge/qeps.hpp"

namespace dehnforge {

namespace {

std::pair<std::string, std::string> split_eps_key(const std::string& key) {
  const auto at = key.rfind('|');
  if (at == std::string::npos) throw Error(ErrorCode::InvalidInput, "not an eps key: " + key, key);
  return {key.substr(0, at), key.substr(at + 1)};
}

void enumerate(const std::vector<std::pair<std::string, int>>& letters, int k, int weight,
               const std::function<void(const std::vector<std::string>&)>& f) {
  std::vector<std::string> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (static_cast<int>(cur.size()) == k) {
      if (left == 0) f(cur);
      return;
    }
    for (std::size_t i = from; i < letters.size(); ++i) {
      if (letters[i].second > left) continue;
      cur.push_back(letters[i].first);
      rec(i + 1, left - letters[i].second);
      cur.pop_back();
    }
  };
  rec(0, weight);
}

QSum prefixed(const QSum& x, const std::string& prefix) {
  QSum out;
  for (const auto& [k, c] : x) out.add(prefix + k, c);
  return out;
}

}  // namespace

EpsLieCoalgebra::EpsLieCoalgebra(std::map<std::string, int> l0_weights, std::map<std::string, int> l1_weights,
                                 std::map<std::string, QSum> cobracket, std::map<std::string, QSum> coaction)
    : l0_(std::move(l0_weights)), l1_(std::move(l1_weights)), delta_(std::move(cobracket)), nu_(std::move(coaction)) {
  const auto require = [](const std::map<std::string, int>& m, const std::string& g) {
    auto it = m.find(g);
    if (it == m.end()) throw Error(ErrorCode::NotACoalgebra, "cobracket mentions unknown generator " + g, g);
    return it->second;
  };
  for (const auto& [x, img] : delta_) {
    const int w = require(l0_, x);
    for (const auto& [k, c] : img) {
      const auto parts = split_key(k, kWedgeSep);
      int s = 0;
      for (const auto& p : parts) s += require(l0_, p);
      if (parts.size() != 2 || s != w)
        throw Error(ErrorCode::NotACoalgebra, "cobracket of " + x + " is not weight-homogeneous in Lambda^2", x);
    }
  }
  for (const auto& [e, img] : nu_) {
    const int w = require(l1_, e);
    for (const auto& [k, c] : img) {
      const auto [q, f] = split_eps_key(k);
      if (require(l0_, q) + require(l1_, f) != w)
        throw Error(ErrorCode::NotACoalgebra, "coaction of " + e + " is not weight-homogeneous", e);
    }
  }
  check_axioms();
}

QSum EpsLieCoalgebra::cobracket(const std::string& x) const {
  auto it = delta_.find(x);
  return it == delta_.end() ? QSum() : it->second;
}

QSum EpsLieCoalgebra::coaction(const std::string& e) const {
  auto it = nu_.find(e);
  return it == nu_.end() ? QSum() : it->second;
}

QSum EpsLieCoalgebra::d_plain(const std::string& wedge_word) const {
  const auto factors = split_key(wedge_word, kWedgeSep);
  QSum out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const QSum pre(join_keys({factors.begin(), factors.begin() + static_cast<long>(i)}, kWedgeSep));
    const QSum post(join_keys({factors.begin() + static_cast<long>(i) + 1, factors.end()}, kWedgeSep));
    const QSum term = wedge2(wedge2(pre, cobracket(factors[i])), post);
    out.add_scaled(term, Rational(i % 2 == 0 ? 1 : -1));
  }
  return out;
}

QSum EpsLieCoalgebra::d_eps(const std::string& key) const {
  const auto [w, e] = split_eps_key(key);
  QSum out;
  for (const auto& [k, c] : d_plain(w)) out.add(k + "|" + e, c);
  const std::size_t m = split_key(w, kWedgeSep).size() + 1;
  const Rational sign = (m - 1) % 2 == 0 ? 1 : -1;
  for (const auto& [k, c] : coaction(e)) {
    const auto [q, f] = split_eps_key(k);
    if (auto wq = wedge_keys(w, q)) out.add(wq->second + "|" + f, sign * c * wq->first);
  }
  return out;
}

void EpsLieCoalgebra::check_axioms() const {
  for (const auto& [x, img] : delta_) {
    QSum dd;
    for (const auto& [k, c] : img) dd.add_scaled(d_plain(k), c);
    if (!dd.is_zero()) throw Error(ErrorCode::NotACoalgebra, "co-Jacobi fails on " + x + ": " + dd.to_string(), x);
  }
  for (const auto& [e, img] : nu_) {
    QSum dd;
    for (const auto& [k, c] : img) dd.add_scaled(d_eps(k), c);
    if (!dd.is_zero())
      throw Error(ErrorCode::NotACoalgebra, "comodule compatibility fails on " + e + ": " + dd.to_string(), e);
  }
}

EpsLieCoalgebra::Complexes EpsLieCoalgebra::cochain_complex(int weight, int max_degree) const {
  std::vector<std::pair<std::string, int>> letters0(l0_.begin(), l0_.end());
  Complexes cx{FiniteComplex<Rational>(1), FiniteComplex<Rational>(1), FiniteComplex<Rational>(1)};
  for (int k = 1; k <= max_degree; ++k) {
    PresentedSpace<Rational> plain;
    PresentedSpace<Rational> eps;
    enumerate(letters0, k, weight, [&](const std::vector<std::string>& s) { plain.add_generator(join_keys(s, kWedgeSep)); });
    for (const auto& [e, we] : l1_)
      enumerate(letters0, k - 1, weight - we,
                [&](const std::vector<std::string>& s) { eps.add_generator(join_keys(s, kWedgeSep) + "|" + e); });
    PresentedSpace<Rational> total;
    for (const auto& g : plain.generators()) total.add_generator("0:" + g);
    for (const auto& g : eps.generators()) total.add_generator("1:" + g);
    cx.plain.add_term(std::move(plain));
    cx.eps.add_term(std::move(eps));
    cx.total.add_term(std::move(total));
  }
  for (int k = 1; k < max_degree; ++k) {
    cx.plain.set_differential(k, [this](const std::string& g) { return d_plain(g); });
    cx.eps.set_differential(k, [this](const std::string& g) { return d_eps(g); });
    cx.total.set_differential(k, [this](const std::string& g) {
      const std::string body = g.substr(2);
      return g[0] == '0' ? prefixed(d_plain(body), "0:") : prefixed(d_eps(body), "1:");
    });
  }
  return cx;
}

}  // namespace dehnforge
