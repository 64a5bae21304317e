#pragma once

#include <string>
#include <vector>

#include "dehnforge/complex.hpp"

namespace dehnforge {

enum class ComplexKind { Cathelineau, Additive, EuclideanDehn };

std::string to_string(ComplexKind k);

// A truncated weight-n complex placed in degrees [1, n]. Generator lists of the
// terms are the truncation; d^2 = 0 has been verified on all of them.
template <class K>
struct WeightComplex {
  int weight = 0;
  ComplexKind kind = ComplexKind::Cathelineau;
  int twist = 0;
  FiniteComplex<K> cx{1};
  std::vector<std::string> warnings;
  bool heuristic = false;

  std::vector<std::size_t> term_sizes() const {
    std::vector<std::size_t> out;
    for (int k = cx.first_degree(); k <= cx.last_degree(); ++k) out.push_back(cx.term(k).generators().size());
    return out;
  }
};

struct SquareFailure {
  int degree = 0;
  std::string generator;
  std::string detail;
};

// Vertical maps v_k from the degree-k term of top to that of bottom. Every
// square d_bottom v_k = v_{k+1} d_top is checked on all generators of top.
template <class K>
std::optional<SquareFailure> diagram_check(const FiniteComplex<K>& top, const FiniteComplex<K>& bottom,
                                           const std::vector<GeneratorMap<K>>& vertical) {
  if (top.first_degree() != bottom.first_degree() || top.last_degree() != bottom.last_degree())
    throw Error(ErrorCode::ShapeMismatch, "complexes occupy different degrees");
  const int first = top.first_degree();
  if (vertical.size() != static_cast<std::size_t>(top.last_degree() - first + 1))
    throw Error(ErrorCode::ShapeMismatch, "one vertical map per degree is required");
  auto v = [&](int k, const FormalSum<K>& x) {
    LinearMap<K> f{&top.term(k), &bottom.term(k), vertical[static_cast<std::size_t>(k - first)]};
    return f(x);
  };
  for (int k = first; k < top.last_degree(); ++k) {
    const LinearMap<K> dt = top.differential(k);
    const LinearMap<K> db = bottom.differential(k);
    for (const auto& g : top.term(k).generators()) {
      const FormalSum<K> x(g);
      const FormalSum<K> diff = db(v(k, x)) - v(k + 1, dt(x));
      if (!diff.is_zero()) return SquareFailure{k, g, diff.to_string()};
    }
  }
  return std::nullopt;
}

}  // namespace dehnforge
