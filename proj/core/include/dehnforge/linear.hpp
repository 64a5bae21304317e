#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dehnforge/error.hpp"
#include "dehnforge/formal_sum.hpp"

namespace dehnforge {

// Reduced row echelon form of a growing set of sparse rows. The pivot of a row
// is its smallest key; rows are kept fully reduced against each other.
template <class K = Rational>
class Echelon {
 public:
  using Row = FormalSum<K>;

  std::size_t rank() const { return rows_.size(); }
  const std::map<std::string, Row>& rows() const { return rows_; }
  bool is_pivot(const std::string& key) const { return rows_.count(key) != 0; }

  Row reduce(const Row& v) const {
    Row r = v;
    for (const auto& [pivot, row] : rows_) {
      const K c = r.coefficient(pivot);
      if (!is_zero_coefficient(c)) r.add_scaled(row, -c);
    }
    return r;
  }

  // Adds v to the row space. Returns the reduced, normalized new row, or zero
  // when v was already dependent.
  Row insert(const Row& v) {
    Row r = reduce(v);
    if (r.is_zero()) return r;
    const std::string pivot = r.begin()->first;
    const K lead = r.begin()->second;
    r = r.scaled(K(1) / lead);
    for (auto& [p, row] : rows_) {
      const K c = row.coefficient(pivot);
      if (!is_zero_coefficient(c)) row.add_scaled(r, -c);
    }
    rows_.emplace(pivot, r);
    return r;
  }

 private:
  std::map<std::string, Row> rows_;
};

// Finite vector space presented by ordered generators modulo relations.
template <class K = Rational>
class PresentedSpace {
 public:
  using Vec = FormalSum<K>;

  PresentedSpace() = default;
  explicit PresentedSpace(std::vector<std::string> generators, std::vector<Vec> relations = {})
      : generators_(std::move(generators)) {
    for (const auto& g : generators_) index_.insert(g);
    for (const auto& r : relations) add_relation(r);
  }

  void add_generator(const std::string& g) {
    if (index_.insert(g).second) generators_.push_back(g);
  }
  void add_relation(const Vec& r) {
    check(r);
    relations_.push_back(r);
    echelon_.insert(r);
  }
  void set_weight(const std::string& g, int w) { weights_[g] = w; }
  void set_twist(int p) { twist_ = p; }
  int twist() const { return twist_; }
  std::optional<int> weight(const std::string& g) const {
    auto it = weights_.find(g);
    if (it == weights_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Vec>& relations() const { return relations_; }
  bool has_generator(const std::string& g) const { return index_.count(g) != 0; }
  std::size_t dimension() const { return generators_.size() - echelon_.rank(); }

  // Generators that are not relation pivots. They form a basis of the quotient.
  std::vector<std::string> free_generators() const {
    std::vector<std::string> out;
    for (const auto& g : generators_)
      if (!echelon_.is_pivot(g)) out.push_back(g);
    return out;
  }

  void check(const Vec& x) const {
    for (const auto& [g, c] : x)
      if (!has_generator(g)) throw Error(ErrorCode::UnknownGenerator, "unknown generator " + g, g);
  }

  Vec canonical_form(const Vec& x) const {
    check(x);
    return echelon_.reduce(x);
  }

 private:
  std::vector<std::string> generators_;
  std::set<std::string> index_;
  std::vector<Vec> relations_;
  std::map<std::string, int> weights_;
  int twist_ = 0;
  Echelon<K> echelon_;
};

inline constexpr std::size_t kDefaultGeneratorCap = 10000;

template <class K>
using GeneratorMap = std::function<FormalSum<K>(const std::string&)>;

template <class K = Rational>
struct LinearMap {
  const PresentedSpace<K>* source = nullptr;
  const PresentedSpace<K>* target = nullptr;
  GeneratorMap<K> on_generator;

  FormalSum<K> operator()(const FormalSum<K>& x) const {
    FormalSum<K> r;
    for (const auto& [g, c] : x) r.add_scaled(on_generator(g), c);
    return target->canonical_form(r);
  }
};

namespace detail {

inline std::string image_tag(const std::string& k) { return "a" + k; }
inline std::string source_tag(const std::string& k) { return "b" + k; }

}  // namespace detail

// Basis of the kernel of the induced map on quotients, written on the free
// generators of the source.
template <class K>
std::vector<FormalSum<K>> kernel_basis(const LinearMap<K>& f, std::size_t cap = kDefaultGeneratorCap) {
  if (f.source->generators().size() > cap)
    throw Error(ErrorCode::DimensionOverflow,
                std::to_string(f.source->generators().size()) + " generators exceed the cap of " + std::to_string(cap));
  Echelon<K> ech;
  for (const auto& g : f.source->free_generators()) {
    FormalSum<K> row;
    for (const auto& [k, c] : f(FormalSum<K>(g))) row.add(detail::image_tag(k), c);
    row.add(detail::source_tag(g), K(1));
    ech.insert(row);
  }
  std::vector<FormalSum<K>> out;
  for (const auto& [pivot, row] : ech.rows()) {
    if (pivot[0] != 'b') continue;
    FormalSum<K> v;
    for (const auto& [k, c] : row) v.add(k.substr(1), c);
    out.push_back(std::move(v));
  }
  return out;
}

template <class K>
std::size_t rank_of(const LinearMap<K>& f) {
  Echelon<K> ech;
  for (const auto& g : f.source->free_generators()) ech.insert(f(FormalSum<K>(g)));
  return ech.rank();
}

}  // namespace dehnforge
