#include "dehnforge/kahler.hpp"

#include <algorithm>
#include <sstream>

#include "dehnforge/error.hpp"
#include "dehnforge/multiplicative.hpp"

namespace dehnforge {

namespace {

std::vector<int> variables_of(const RatFunc& f) {
  std::vector<int> out;
  const auto used = f.used_variables();
  for (int i = 0; i < 16; ++i)
    if (used & (1u << i)) out.push_back(i);
  return out;
}

RatFunc as_function(const Scalar& s) {
  if (s.is_ratfunc()) return s.ratfunc();
  if (s.is_rational()) return RatFunc(s.rational_value());
  throw Error(ErrorCode::NotRationalFunctionField, s.to_string() + " is not in Q(t1..tk)", s.to_string());
}

}  // namespace

OmegaForm OmegaForm::differential(const RatFunc& f) {
  OmegaForm out(1);
  for (int v : variables_of(f)) out.add({v}, f.derivative(v));
  return out;
}

OmegaForm OmegaForm::dlog(const RatFunc& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroElement, "dlog of zero");
  return differential(f).scaled(f.inverse());
}

RatFunc OmegaForm::coefficient(const std::vector<int>& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? RatFunc() : it->second;
}

void OmegaForm::add(std::vector<int> index, const RatFunc& c) {
  if (static_cast<int>(index.size()) != degree_) throw Error(ErrorCode::ShapeMismatch, "form degree mismatch");
  // Sort with sign; a repeated index kills the term.
  int sign = 1;
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j + 1 < index.size() - i; ++j)
      if (index[j] > index[j + 1]) {
        std::swap(index[j], index[j + 1]);
        sign = -sign;
      }
  if (std::adjacent_find(index.begin(), index.end()) != index.end()) return;
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(index, sign > 0 ? c : -c);
  if (!fresh) {
    it->second += sign > 0 ? c : -c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OmegaForm& OmegaForm::operator+=(const OmegaForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && terms_.empty()) degree_ = o.degree_;
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

OmegaForm OmegaForm::scaled(const RatFunc& c) const {
  OmegaForm out(degree_);
  for (const auto& [i, v] : terms_) out.add(i, v * c);
  return out;
}

OmegaForm wedge(const OmegaForm& a, const OmegaForm& b) {
  OmegaForm out(a.degree_ + b.degree_);
  for (const auto& [i, u] : a.terms_)
    for (const auto& [j, v] : b.terms_) {
      auto k = i;
      k.insert(k.end(), j.begin(), j.end());
      out.add(std::move(k), u * v);
    }
  return out;
}

std::string OmegaForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")";
    first = false;
    for (std::size_t a = 0; a < i.size(); ++a) os << (a ? "^" : " ") << "d" << variable_name(i[a]);
  }
  return os.str();
}

OmegaForm dlog_map(const TensorElement& x, int degree) {
  std::map<std::string, OmegaForm> cache;
  auto one_form = [&](const std::string& sym) -> const OmegaForm& {
    auto it = cache.find(sym);
    if (it != cache.end()) return it->second;
    OmegaForm w(1);
    if (sym.rfind("f:", 0) == 0)
      w = OmegaForm::dlog(as_function(symbol_value(sym)));
    else if (sym.rfind("p:", 0) != 0)
      throw Error(ErrorCode::NotRationalFunctionField, "symbol " + sym + " is not over Q(t1..tk)", sym);
    return cache.emplace(sym, std::move(w)).first->second;
  };
  OmegaForm out(std::max(degree, 0));
  bool fixed = degree >= 0;
  for (const auto& [key, a] : x) {
    std::string word = key;
    if (word.rfind("F|", 0) == 0) word = word.substr(2);
    const auto syms = split_key(word, kWedgeSep);
    if (!fixed) {
      out = OmegaForm(static_cast<int>(syms.size()));
      fixed = true;
    }
    if (static_cast<int>(syms.size()) != out.degree())
      throw Error(ErrorCode::ShapeMismatch, "mixed wedge degrees in dlog input", key);
    OmegaForm term(0);
    term.add({}, as_function(a));
    for (const auto& s : syms) term = wedge(term, one_form(s));
    out += term;
  }
  return out;
}

}  // namespace dehnforge
