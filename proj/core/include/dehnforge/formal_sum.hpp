#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "dehnforge/ratfunc.hpp"
#include "dehnforge/tower.hpp"

namespace dehnforge {

inline std::string coefficient_string(const Rational& q) { return q.get_str(); }
inline std::string coefficient_string(const RatFunc& f) { return f.to_string(); }
inline std::string coefficient_string(const TowerElement& x) { return x.to_string(); }

template <class K>
bool is_zero_coefficient(const K& k) {
  return k == K(0);
}

// Sparse finite linear combination of ordered generator symbols. Zero
// coefficients are never stored.
template <class K = Rational, class Key = std::string>
class FormalSum {
 public:
  using Terms = std::map<Key, K>;

  FormalSum() = default;
  FormalSum(const Key& key, const K& c = K(1)) { add(key, c); }  // NOLINT(google-explicit-constructor)

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  K coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add(const Key& key, const K& c) {
    if (is_zero_coefficient(c)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coefficient(it->second)) terms_.erase(it);
    }
  }

  void add_scaled(const FormalSum& o, const K& c) {
    if (is_zero_coefficient(c)) return;
    for (const auto& [k, v] : o.terms_) add(k, K(v * c));
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [k, v] : o.terms_) add(k, K(-v));
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  FormalSum operator-() const {
    FormalSum r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  FormalSum scaled(const K& c) const {
    FormalSum r;
    r.add_scaled(*this, c);
    return r;
  }
  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

  // Applies a linear map given on generators.
  template <class F>
  FormalSum map_linear(F&& image_of) const {
    FormalSum r;
    for (const auto& [k, v] : terms_) r.add_scaled(image_of(k), v);
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coefficient_string(v) << ")*[" << k << "]";
    }
    return os.str();
  }

 private:
  Terms terms_;
};

using QSum = FormalSum<Rational>;

}  // namespace dehnforge
