#pragma once

#include <algorithm>
#include <vector>

#include "cospec/integer.hpp"
#include "cospec/matrix.hpp"

namespace cospec {

/// Monic characteristic polynomial det(xI - M); coeffs[k] multiplies x^k.
struct CharPoly {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Berkowitz's division-free recurrence. Returns coefficients from x^n down
/// to x^0. Each step multiplies the previous polynomial by the Toeplitz
/// column (1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C) where A_r is the
/// leading r x r block, R the partial row r and C the partial column r.
template <typename T>
std::vector<T> berkowitz(const SquareMatrix<T>& a) {
  const int n = a.size();
  std::vector<T> p{T(1)};
  std::vector<T> q, v, w, next;
  for (int r = 0; r < n; ++r) {
    q.assign(r + 2, T(0));
    q[0] = T(1);
    q[1] = T(0) - a(r, r);
    v.resize(r);
    for (int i = 0; i < r; ++i) v[i] = a(i, r);
    for (int k = 0; k < r; ++k) {
      T s(0);
      for (int i = 0; i < r; ++i) s += a(r, i) * v[i];
      q[k + 2] = T(0) - s;
      if (k + 1 < r) {
        w.assign(r, T(0));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) w[i] += a(i, j) * v[j];
        std::swap(v, w);
      }
    }
    next.assign(r + 2, T(0));
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) next[i] += q[i - j] * p[j];
    std::swap(p, next);
  }
  return p;
}

namespace detail {

template <typename T>
CharPoly char_poly_as(const BigIntMatrix& m) {
  const auto hi_to_lo = berkowitz(m.cast<T>());
  CharPoly out;
  out.coeffs.reserve(hi_to_lo.size());
  for (auto it = hi_to_lo.rbegin(); it != hi_to_lo.rend(); ++it) out.coeffs.push_back(to_bigint(*it));
  return out;
}

}  // namespace detail

/// Exact characteristic polynomial. Runs in checked 64-bit, then checked
/// 128-bit arithmetic, and falls back to arbitrary precision on overflow.
inline CharPoly char_poly(const BigIntMatrix& m) {
  try {
    return detail::char_poly_as<Int64>(m);
  } catch (const IntegerOverflow&) {
  }
  try {
    return detail::char_poly_as<Int128>(m);
  } catch (const IntegerOverflow&) {
  }
  return detail::char_poly_as<BigInt>(m);
}

}  // namespace cospec
