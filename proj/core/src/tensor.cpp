#include "dehnforge/tensor.hpp"

#include "dehnforge/error.hpp"
#include "dehnforge/multiplicative.hpp"

namespace dehnforge {

int sort_wedge(std::vector<std::string>& factors) {
  int sign = 1;
  for (std::size_t i = 1; i < factors.size(); ++i)
    for (std::size_t j = i; j > 0 && factors[j - 1] >= factors[j]; --j) {
      if (factors[j - 1] == factors[j]) return 0;
      std::swap(factors[j - 1], factors[j]);
      sign = -sign;
    }
  return sign;
}

std::string join_keys(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split_key(const std::string& key, char sep) {
  std::vector<std::string> out;
  if (key.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = key.find(sep, start);
    out.push_back(key.substr(start, at - start));
    if (at == std::string::npos) return out;
    start = at + 1;
  }
}

std::optional<std::pair<int, std::string>> wedge_keys(const std::string& a, const std::string& b) {
  auto word = split_key(a, kWedgeSep);
  for (auto& s : split_key(b, kWedgeSep)) word.push_back(std::move(s));
  const int s = sort_wedge(word);
  if (s == 0) return std::nullopt;
  return std::make_pair(s, join_keys(word, kWedgeSep));
}

TensorElement tensor_normalize(const std::vector<RawTensor>& terms, bool* heuristic) {
  TensorElement out;
  for (const auto& t : terms) {
    Scalar c = t.coefficient;
    QSum acc(std::string{}, Rational(1));
    bool first = true;
    bool additive_seen = false;
    for (const auto& slot : t.slots) {
      if (slot.values.empty()) throw Error(ErrorCode::InvalidInput, "empty tensor slot");
      QSum part;
      if (slot.kind == SlotKind::Additive) {
        if (additive_seen) throw Error(ErrorCode::InvalidInput, "at most one additive slot is supported");
        additive_seen = true;
        c = c * slot.values.front();
        continue;
      }
      if (slot.kind == SlotKind::Multiplicative) {
        part = multiplicative_vector(slot.values.front(), heuristic);
      } else {
        std::vector<QSum> fs;
        for (const auto& v : slot.values) fs.push_back(multiplicative_vector(v, heuristic));
        part = wedge(fs);
      }
      acc = first ? part : tensor2(acc, part);
      first = false;
    }
    if (c.is_zero()) continue;
    for (const auto& [k, q] : acc) out.add(k, c * Scalar(q));
  }
  return out;
}

}  // namespace dehnforge
