#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

// Rank by textbook dense Gaussian elimination; independent of the sparse
// echelon code.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Dense antisymmetrizer on all words of length n with at most one eps letter;
// returns the ranks of its two blocks.
inline std::pair<std::size_t, std::size_t> brute_exterior(std::size_t d0, std::size_t d1, int n) {
  std::vector<std::vector<int>> words[2];
  const std::size_t alphabet = d0 + d1;
  if (alphabet == 0) return {0, 0};
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (;;) {
    const auto eps = std::count_if(w.begin(), w.end(), [&](int l) { return l >= static_cast<int>(d0); });
    if (eps <= 1) words[eps].push_back(w);
    std::size_t i = 0;
    while (i < w.size() && ++w[i] == static_cast<int>(alphabet)) w[i++] = 0;
    if (i == w.size()) break;
  }
  std::pair<std::size_t, std::size_t> out;
  for (int part = 0; part < 2; ++part) {
    const auto& ws = words[part];
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < ws.size(); ++i) index[ws[i]] = i;
    std::vector<std::vector<mpq_class>> a(ws.size(), std::vector<mpq_class>(ws.size()));
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (std::size_t col = 0; col < ws.size(); ++col) {
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
      do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) sign = -sign;
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
          img[static_cast<std::size_t>(i)] = ws[col][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        a[index[img]][col] += sign;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    (part == 0 ? out.first : out.second) = dense_rank(a);
  }
  return out;
}
