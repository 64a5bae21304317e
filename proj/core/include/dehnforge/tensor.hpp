#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dehnforge/formal_sum.hpp"
#include "dehnforge/scalar.hpp"

namespace dehnforge {

inline constexpr char kTensorSep = '|';
inline constexpr char kWedgeSep = '&';

// Sorts wedge factors in place. Returns the permutation sign, or 0 when a
// factor repeats.
int sort_wedge(std::vector<std::string>& factors);
std::string join_keys(const std::vector<std::string>& parts, char sep);
std::vector<std::string> split_key(const std::string& key, char sep);

// Exterior product of vectors in a space with string basis. Keys of the result
// are sorted wedge words joined by kWedgeSep.
template <class K>
FormalSum<K> wedge(const std::vector<FormalSum<K>>& factors) {
  std::vector<std::pair<std::vector<std::string>, K>> acc{{{}, K(1)}};
  for (const auto& f : factors) {
    std::vector<std::pair<std::vector<std::string>, K>> next;
    for (const auto& [word, c] : acc)
      for (const auto& [k, v] : f) {
        auto w = word;
        w.push_back(k);
        next.emplace_back(std::move(w), K(c * v));
      }
    acc = std::move(next);
  }
  FormalSum<K> out;
  for (auto& [word, c] : acc) {
    const int s = sort_wedge(word);
    if (s != 0) out.add(join_keys(word, kWedgeSep), s > 0 ? c : K(-c));
  }
  return out;
}

// Wedge of two already-normalized exterior keys.
std::optional<std::pair<int, std::string>> wedge_keys(const std::string& a, const std::string& b);

template <class K>
FormalSum<K> wedge2(const FormalSum<K>& a, const FormalSum<K>& b) {
  FormalSum<K> out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b)
      if (auto w = wedge_keys(ka, kb)) {
        K p = va * vb;
        if (w->first < 0) p = -p;
        out.add(w->second, p);
      }
  return out;
}

template <class K>
FormalSum<K> tensor2(const FormalSum<K>& a, const FormalSum<K>& b) {
  FormalSum<K> out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) out.add(ka + kTensorSep + kb, K(va * vb));
  return out;
}

enum class SlotKind { Additive, Multiplicative, Exterior };

struct RawSlot {
  SlotKind kind = SlotKind::Multiplicative;
  std::vector<Scalar> values;  // one value, or k values for an exterior slot
};

struct RawTensor {
  Scalar coefficient = 1;
  std::vector<RawSlot> slots;
};

// Elements of F (x) F* (x) ... (x) Lambda^k F*: the additive slot is absorbed
// into the coefficient; multiplicative slots are written on F* (x) Q symbols.
using TensorElement = FormalSum<Scalar>;

// Canonical form of a sum of pure tensors. At most one additive slot is
// allowed. Raises ZeroInMultiplicativeSlot.
TensorElement tensor_normalize(const std::vector<RawTensor>& terms, bool* heuristic = nullptr);

}  // namespace dehnforge
