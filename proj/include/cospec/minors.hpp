#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cospec/integer.hpp"
#include "cospec/matrix.hpp"

namespace cospec {

/// Fraction-free (Bareiss) determinant.
inline BigInt determinant(BigIntMatrix a) {
  const int n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Determinantal divisor: gcd of all k x k minors (0 when every minor vanishes).
/// Exhaustive over row and column subsets, so only meant for small n.
inline BigInt gcd_of_k_minors(const BigIntMatrix& m, int k) {
  const int n = m.size();
  if (k < 1 || k > n) throw std::out_of_range("minor order " + std::to_string(k) + " outside [1, n]");

  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  auto build = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  build(build, 0);

  BigInt g = 0;
  BigIntMatrix sub(k);
  for (const auto& rows : subsets)
    for (const auto& cols : subsets) {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      g = gcd_value(g, determinant(sub));
      if (g == 1) return g;
    }
  return g;
}

}  // namespace cospec
