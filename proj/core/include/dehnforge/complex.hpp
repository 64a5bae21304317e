#pragma once

#include <deque>
#include <string>
#include <vector>

#include "dehnforge/linear.hpp"

namespace dehnforge {

template <class K = Rational>
struct Homology {
  std::size_t dimension = 0;
  std::vector<FormalSum<K>> representatives;
};

// Cochain complex of presented spaces in consecutive degrees, with d raising
// degree by one. Differentials are given on generators.
template <class K = Rational>
class FiniteComplex {
 public:
  explicit FiniteComplex(int first_degree = 1) : first_(first_degree) {}

  int first_degree() const { return first_; }
  int last_degree() const { return first_ + static_cast<int>(terms_.size()) - 1; }
  bool has_degree(int k) const { return k >= first_ && k <= last_degree(); }

  PresentedSpace<K>& add_term(PresentedSpace<K> space) {
    terms_.push_back(std::move(space));
    maps_.emplace_back();
    return terms_.back();
  }
  const PresentedSpace<K>& term(int k) const { return has_degree(k) ? terms_[index(k)] : empty_; }
  PresentedSpace<K>& term(int k) { return terms_.at(index(k)); }

  void set_differential(int k, GeneratorMap<K> d) { maps_.at(index(k)) = std::move(d); }

  LinearMap<K> differential(int k) const {
    LinearMap<K> f{&term(k), &term(k + 1), {}};
    if (has_degree(k) && has_degree(k + 1) && maps_[index(k)])
      f.on_generator = maps_[index(k)];
    else
      f.on_generator = [](const std::string&) { return FormalSum<K>(); };
    return f;
  }

  // Throws NotAComplex naming the first generator with d(d(g)) != 0.
  void verify() const {
    for (int k = first_; k + 2 <= last_degree(); ++k) {
      const LinearMap<K> d1 = differential(k);
      const LinearMap<K> d2 = differential(k + 1);
      for (const auto& g : term(k).generators()) {
        const FormalSum<K> dd = d2(d1(FormalSum<K>(g)));
        if (!dd.is_zero())
          throw Error(ErrorCode::NotAComplex,
                      "d(d(" + g + ")) = " + dd.to_string() + " in degree " + std::to_string(k + 2), g);
      }
    }
  }

  Homology<K> homology(int k, std::size_t cap = kDefaultGeneratorCap) const {
    verify();
    Echelon<K> image;
    if (has_degree(k - 1)) {
      const LinearMap<K> in = differential(k - 1);
      for (const auto& g : term(k - 1).free_generators()) image.insert(in(FormalSum<K>(g)));
    }
    Homology<K> h;
    const std::size_t incoming = image.rank();
    for (const auto& v : kernel_basis(differential(k), cap))
      if (!image.insert(v).is_zero()) h.representatives.push_back(v);
    h.dimension = image.rank() - incoming;
    return h;
  }

 private:
  std::size_t index(int k) const { return static_cast<std::size_t>(k - first_); }

  int first_;
  std::deque<PresentedSpace<K>> terms_;
  std::deque<GeneratorMap<K>> maps_;
  PresentedSpace<K> empty_;
};

}  // namespace dehnforge
