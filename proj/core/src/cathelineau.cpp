#include "dehnforge/cathelineau.hpp"

#include <array>
#include <map>
#include <optional>
#include <memory>

#include "dehnforge/error.hpp"
#include "dehnforge/multiplicative.hpp"

namespace dehnforge {

std::string to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::Cathelineau: return "cathelineau";
    case ComplexKind::Additive: return "additive";
    case ComplexKind::EuclideanDehn: return "euclidean-dehn";
  }
  return "?";
}

BStructure compatible_b_structure() {
  return {"compatible", [](const Scalar& x) { return Scalar(1) - x; },
          [](const Scalar& x) { return std::make_pair(x, Scalar(1) - x); }, -1};
}

BStructure standard_b_structure() {
  return {"standard", [](const Scalar& x) { return x; },
          [](const Scalar& x) { return std::make_pair(Scalar(1) - x, x); }, 1};
}

BStructure b_structure_by_name(const std::string& name) {
  if (name == "compatible") return compatible_b_structure();
  if (name == "standard") return standard_b_structure();
  throw Error(ErrorCode::InvalidInput, "unknown B-structure " + name, name);
}

std::vector<std::pair<Scalar, int>> five_term_element(const Scalar& x, const Scalar& y) {
  // Cross-ratios of (0, inf, 1, x, y) with one point dropped at a time.
  const Scalar one(1);
  return {{x, 1}, {y, -1}, {y / x, 1}, {(one - y) / (one - x), -1}, {(one - one / y) / (one - one / x), 1}};
}

namespace {

void require_argument(const Scalar& x) {
  if (x.is_zero() || x == Scalar(1))
    throw Error(ErrorCode::ArgumentOutOfDomain, "argument must lie in F* minus {1}", x.to_string());
}

FormalSum<Scalar> lift(const QSum& v) {
  FormalSum<Scalar> out;
  for (const auto& [k, c] : v) out.add(k, Scalar(c));
  return out;
}

}  // namespace

QSum b2_coproduct(const std::vector<std::pair<Scalar, int>>& element, const BStructure& b) {
  QSum out;
  for (const auto& [x, c] : element) {
    require_argument(x);
    const auto [u, v] = b.top(x);
    out.add_scaled(wedge2(multiplicative_vector(u), multiplicative_vector(v)), Rational(c));
  }
  return out;
}

DeltaComponents cathelineau_delta(const Scalar& x, int n, bool* heuristic) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "delta needs weight at least 2");
  require_argument(x);
  const Scalar y = Scalar(1) - x;
  DeltaComponents out;
  const QSum v1 = multiplicative_vector(y, heuristic);
  if (n == 2) {
    const QSum v0 = multiplicative_vector(x, heuristic);
    for (const auto& [p, c] : v1) out.first.add(p, x * Scalar(c));
    for (const auto& [p, c] : v0) out.second.add(p, y * Scalar(c));
  } else {
    for (const auto& [p, c] : v1) out.first.add("<" + x.to_string() + ">" + kTensorSep + p, Scalar(c));
    out.second.add("{" + x.to_string() + "}", y);
  }
  return out;
}

namespace {

struct ParsedKey {
  char kind = 'F';
  int m = 0;
  std::string arg;
  std::string wedge;
};

ParsedKey parse_key(const std::string& key) {
  ParsedKey p;
  const auto bar = key.rfind(kTensorSep);
  if (bar == std::string::npos || key.empty()) throw Error(ErrorCode::UnknownGenerator, "malformed key " + key, key);
  p.kind = key[0];
  p.wedge = key.substr(bar + 1);
  if (p.kind == 'F') return p;
  const std::string head = key.substr(0, bar);
  const auto open = head.find(p.kind == 'b' ? '<' : '{');
  if (open == std::string::npos || head.size() < open + 2)
    throw Error(ErrorCode::UnknownGenerator, "malformed key " + key, key);
  p.m = std::stoi(head.substr(1, open - 1));
  p.arg = head.substr(open + 1, head.size() - open - 2);
  return p;
}

std::string beta_key(int m, const std::string& arg, const std::string& w) {
  return "b" + std::to_string(m) + "<" + arg + ">" + kTensorSep + w;
}
std::string bloch_key(int m, const std::string& arg, const std::string& w) {
  return "B" + std::to_string(m) + "{" + arg + "}" + kTensorSep + w;
}
std::string field_key(const std::string& w) { return std::string("F") + kTensorSep + w; }

// Shared by the differentials of one complex; closures hold it alive.
struct CathelineauState {
  int n = 0;
  BStructure b;
  std::vector<std::string> order;
  std::map<std::string, Scalar> args;
  std::map<std::string, QSum> vec_x;
  std::map<std::string, QSum> vec_1mx;
  std::map<std::string, QSum> vec_lower;
  std::map<std::string, QSum> top;
  std::map<int, Echelon<Scalar>> kernels;
  bool heuristic = false;

  void add(const Scalar& x) {
    require_argument(x);
    const std::string s = x.to_string();
    if (args.count(s)) return;
    order.push_back(s);
    args.emplace(s, x);
    vec_x.emplace(s, multiplicative_vector(x, &heuristic));
    vec_1mx.emplace(s, multiplicative_vector(Scalar(1) - x, &heuristic));
    vec_lower.emplace(s, multiplicative_vector(b.lower(x), &heuristic));
    const auto [u, v] = b.top(x);
    top.emplace(s, wedge2(multiplicative_vector(u, &heuristic), multiplicative_vector(v, &heuristic)));
  }

  // <x>_m in the truncated beta_m, as a combination of free arguments.
  FormalSum<Scalar> reduce(int m, const std::string& arg) const {
    const FormalSum<Scalar> v(arg);
    auto it = kernels.find(m);
    return it == kernels.end() ? v : it->second.reduce(v);
  }

  // delta_m with its two target components kept apart.
  FormalSum<Scalar> separated_delta(int m, const std::string& arg) const {
    const Scalar& x = args.at(arg);
    const Scalar y = Scalar(1) - x;
    FormalSum<Scalar> out;
    if (m == 2) {
      for (const auto& [p, c] : vec_1mx.at(arg)) out.add(std::string("L") + kTensorSep + p, x * Scalar(c));
      for (const auto& [p, c] : vec_x.at(arg)) out.add(std::string("R") + kTensorSep + p, y * Scalar(c));
      return out;
    }
    for (const auto& [z, r] : reduce(m - 1, arg))
      for (const auto& [p, c] : vec_1mx.at(arg)) out.add(std::string("L") + kTensorSep + z + kTensorSep + p, r * Scalar(c));
    out.add(std::string("R") + kTensorSep + "{" + arg + "}", y);
    return out;
  }

  FormalSum<Scalar> d(const std::string& key) const {
    const ParsedKey k = parse_key(key);
    FormalSum<Scalar> out;
    if (k.kind == 'F') return out;
    const Scalar& x = args.at(k.arg);
    const FormalSum<Scalar> w(k.wedge);
    if (k.kind == 'b') {
      const Scalar y = Scalar(1) - x;
      const auto right = wedge2(lift(vec_1mx.at(k.arg)), w);
      if (k.m == 2) {
        for (const auto& [wk, wc] : right) out.add(field_key(wk), x * wc);
        for (const auto& [wk, wc] : wedge2(lift(vec_x.at(k.arg)), w)) out.add(field_key(wk), y * wc);
        return out;
      }
      for (const auto& [z, r] : reduce(k.m - 1, k.arg))
        for (const auto& [wk, wc] : right) out.add(beta_key(k.m - 1, z, wk), r * wc);
      out.add(bloch_key(k.m - 1, k.arg, k.wedge), y);
      return out;
    }
    const Scalar s(b.leibniz_sign);
    if (k.m == 2) {
      for (const auto& [wk, wc] : wedge2(lift(top.at(k.arg)), w)) out.add(field_key(wk), s * wc);
      return out;
    }
    for (const auto& [wk, wc] : wedge2(lift(vec_lower.at(k.arg)), w)) out.add(bloch_key(k.m - 1, k.arg, wk), s * wc);
    return out;
  }
};

// Value at a rational point, or nothing for irrational tower elements and
// poles.
std::optional<Rational> specialize(const Scalar& c, const std::array<Rational, kMaxVars>& pt) {
  if (c.is_rational()) return c.rational_value();
  if (!c.is_ratfunc()) return std::nullopt;
  const Rational den = c.ratfunc().den().evaluate(pt);
  if (den == 0) return std::nullopt;
  return c.ratfunc().num().evaluate(pt) / den;
}

// Exact elimination over Q(t) swells badly. A rank computed at one rational
// point never exceeds the generic rank, so full rank there proves the kernel
// is zero.
bool injective_at_a_point(const CathelineauState& st, int m) {
  std::array<Rational, kMaxVars> pt;
  for (int i = 0; i < kMaxVars; ++i) pt[static_cast<std::size_t>(i)] = Rational(7919 + 104 * i, 97 + 3 * i);
  Echelon<Rational> e;
  for (const auto& a : st.order) {
    QSum row;
    for (const auto& [k, c] : st.separated_delta(m, a)) {
      const auto v = specialize(c, pt);
      if (!v) return false;
      row.add(k, *v);
    }
    if (e.insert(row).is_zero()) return false;
  }
  return true;
}

std::vector<FormalSum<Scalar>> kernel_of_delta(const CathelineauState& st, int m) {
  if (injective_at_a_point(st, m)) return {};
  PresentedSpace<Scalar> source;
  PresentedSpace<Scalar> target;
  for (const auto& a : st.order) {
    source.add_generator(a);
    for (const auto& [k, c] : st.separated_delta(m, a)) target.add_generator(k);
  }
  LinearMap<Scalar> f{&source, &target, [&](const std::string& a) { return st.separated_delta(m, a); }};
  return kernel_basis(f, std::max<std::size_t>(kDefaultGeneratorCap, st.order.size()));
}

std::shared_ptr<CathelineauState> make_state(int n, const std::vector<Scalar>& gens, const BStructure& b) {
  auto st = std::make_shared<CathelineauState>();
  st->n = n;
  st->b = b;
  for (const auto& g : gens) st->add(g);
  for (int m = 2; m < n; ++m) {
    Echelon<Scalar> e;
    for (const auto& v : kernel_of_delta(*st, m)) e.insert(v);
    st->kernels.emplace(m, std::move(e));
  }
  return st;
}

}  // namespace

std::vector<FormalSum<Scalar>> cathelineau_kernel(int n, const std::vector<Scalar>& gens, const BStructure& b) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "delta needs weight at least 2");
  const auto st = make_state(n, gens, b);
  return kernel_of_delta(*st, n);
}

WeightComplex<Scalar> build_cathelineau_complex(int n, const std::vector<Scalar>& gens, const BStructure& b,
                                                std::size_t cap) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "Cathelineau complexes start in weight 2");
  if (gens.empty()) throw Error(ErrorCode::InvalidInput, "empty generator list");
  const auto st = make_state(n, gens, b);
  WeightComplex<Scalar> out;
  out.weight = n;
  out.kind = ComplexKind::Cathelineau;
  out.cx = FiniteComplex<Scalar>(1);
  PresentedSpace<Scalar> first;
  for (const auto& a : st->order) first.add_generator(beta_key(n, a, ""));
  out.cx.add_term(std::move(first));
  for (int k = 1; k < n; ++k) {
    PresentedSpace<Scalar> next;
    for (const auto& g : out.cx.term(k).generators())
      for (const auto& [key, c] : st->d(g)) next.add_generator(key);
    if (next.generators().size() > cap)
      throw Error(ErrorCode::TruncationBlowup,
                  "degree " + std::to_string(k + 1) + " has " + std::to_string(next.generators().size()) +
                      " generators, cap " + std::to_string(cap));
    out.cx.add_term(std::move(next));
    out.cx.set_differential(k, [st](const std::string& g) { return st->d(g); });
  }
  for (int k = 1; k <= n; ++k) out.cx.term(k).set_twist(0);
  out.heuristic = st->heuristic;
  out.cx.verify();
  for (const auto& [m, e] : st->kernels)
    if (e.rank() == 0)
      out.warnings.push_back("KernelTruncationEmpty: the kernel of delta in weight " + std::to_string(m) +
                             " is zero on this truncation; beta_" + std::to_string(m) + " is free");
  // More arguments than target dimensions already forces a kernel.
  if (out.cx.term(1).generators().size() <= out.cx.term(2).generators().size() &&
      kernel_basis(out.cx.differential(1), std::max(cap, st->order.size())).empty())
    out.warnings.push_back("KernelTruncationEmpty: degree-1 cohomology vanishes on this truncation");
  return out;
}

}  // namespace dehnforge

namespace dehnforge {

namespace {

WeightComplex<Scalar> weight_one_complex() {
  WeightComplex<Scalar> c;
  c.weight = 1;
  c.cx = FiniteComplex<Scalar>(1);
  PresentedSpace<Scalar> f;
  f.add_generator(field_key(""));
  c.cx.add_term(std::move(f));
  return c;
}

std::string summand_prefix(int k) { return "s" + std::to_string(k) + "/"; }

}  // namespace

AdditiveComplex build_additive_complex(int n, const std::vector<Scalar>& gens, const BStructure& b,
                                       std::size_t cap) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "weight must be positive");
  auto parts = std::make_shared<std::vector<WeightComplex<Scalar>>>();
  for (int k = 0; k < n; ++k) {
    WeightComplex<Scalar> s = n - k >= 2 ? build_cathelineau_complex(n - k, gens, b, cap) : weight_one_complex();
    s.twist = k;
    for (int d = s.cx.first_degree(); d <= s.cx.last_degree(); ++d) s.cx.term(d).set_twist(k);
    parts->push_back(std::move(s));
  }
  AdditiveComplex out;
  out.total.weight = n;
  out.total.kind = ComplexKind::Additive;
  out.total.cx = FiniteComplex<Scalar>(1);
  for (int d = 1; d <= n; ++d) {
    PresentedSpace<Scalar> term;
    for (int k = 0; k < n; ++k) {
      const auto& cx = (*parts)[static_cast<std::size_t>(k)].cx;
      if (!cx.has_degree(d)) continue;
      for (const auto& g : cx.term(d).generators()) term.add_generator(summand_prefix(k) + g);
    }
    out.total.cx.add_term(std::move(term));
  }
  for (int d = 1; d < n; ++d)
    out.total.cx.set_differential(d, [parts, d](const std::string& g) {
      const auto slash = g.find('/');
      const int k = std::stoi(g.substr(1, slash - 1));
      const auto& cx = (*parts)[static_cast<std::size_t>(k)].cx;
      FormalSum<Scalar> r;
      if (!cx.has_degree(d + 1)) return r;
      for (const auto& [key, c] : cx.differential(d)(FormalSum<Scalar>(g.substr(slash + 1))))
        r.add(summand_prefix(k) + key, c);
      return r;
    });
  out.total.cx.verify();
  for (const auto& p : *parts) {
    out.total.heuristic = out.total.heuristic || p.heuristic;
    for (const auto& w : p.warnings) out.total.warnings.push_back("summand weight " + std::to_string(p.weight) + ": " + w);
  }
  out.summands = *parts;
  return out;
}

}  // namespace dehnforge
