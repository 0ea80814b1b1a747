#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cospec/integer.hpp"
#include "cospec/matrix.hpp"

namespace cospec {

/// Smith normal form diag(f_1, ..., f_r, 0, ..., 0): the positive invariant
/// factors f_1 | f_2 | ... | f_r and the number of zero diagonal entries.
struct SnfResult {
  std::vector<BigInt> factors;
  int zeros = 0;

  int rank() const { return static_cast<int>(factors.size()); }
  int dimension() const { return rank() + zeros; }
  int unit_factors() const {
    int c = 0;
    for (const auto& f : factors) c += (f == 1);
    return c;
  }
  bool divisibility_chain() const {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i] <= 0) return false;
      if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0) return false;
    }
    return zeros >= 0;
  }

  friend bool operator==(const SnfResult&, const SnfResult&) = default;
};

/// Diagonalizes `a` in place by unimodular row and column operations and
/// returns the absolute values of the nonzero diagonal, not yet in
/// divisibility order. The pivot is always a nonzero entry of minimal
/// absolute value in the trailing submatrix.
template <typename T>
std::vector<T> smith_diagonal(SquareMatrix<T> a) {
  const int n = a.size();
  std::vector<T> diag;
  for (int t = 0; t < n; ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      T best(0);
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j) {
          const T& x = a(i, j);
          if (x == T(0)) continue;
          T ax = abs_value(x);
          if (pi < 0 || ax < best) {
            best = ax;
            pi = i;
            pj = j;
            if (best == T(1)) goto found;
          }
        }
    found:
      if (pi < 0) return diag;
      if (pi != t)
        for (int j = t; j < n; ++j) std::swap(a(t, j), a(pi, j));
      if (pj != t)
        for (int i = t; i < n; ++i) std::swap(a(i, t), a(i, pj));

      const T pivot = a(t, t);
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (a(i, t) == T(0)) continue;
        const T q = a(i, t) / pivot;
        for (int j = t; j < n; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != T(0)) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (a(t, j) == T(0)) continue;
        const T q = a(t, j) / pivot;
        for (int i = t; i < n; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != T(0)) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs_value(a(t, t)));
  }
  return diag;
}

/// Replaces each adjacent-or-not pair (d_i, d_j), i < j, by (gcd, lcm), which
/// preserves unimodular equivalence and leaves a divisibility chain.
template <typename T>
void enforce_divisibility_chain(std::vector<T>& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == T(0)) continue;
      const T g = gcd_value(d[i], d[j]);
      d[j] = (d[i] / g) * d[j];
      d[i] = g;
    }
}

namespace detail {

template <typename T>
SnfResult snf_as(const BigIntMatrix& m) {
  auto d = smith_diagonal(m.cast<T>());
  enforce_divisibility_chain(d);
  SnfResult r;
  r.factors.reserve(d.size());
  for (const auto& x : d) r.factors.push_back(to_bigint(x));
  r.zeros = m.size() - static_cast<int>(d.size());
  return r;
}

}  // namespace detail

inline SnfResult snf(const BigIntMatrix& m) {
  try {
    return detail::snf_as<Int64>(m);
  } catch (const IntegerOverflow&) {
  }
  try {
    return detail::snf_as<Int128>(m);
  } catch (const IntegerOverflow&) {
  }
  return detail::snf_as<BigInt>(m);
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(long long p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

/// Rank over F_p by Gaussian elimination on the residues.
inline int p_rank(const BigIntMatrix& m, long long p) {
  require_prime(p);
  if (p > std::numeric_limits<std::int32_t>::max()) throw std::invalid_argument("prime too large");
  const int n = m.size();
  std::vector<std::int64_t> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt r = m(i, j) % p;
      if (r < 0) r += p;
      a[static_cast<std::size_t>(i) * n + j] = static_cast<std::int64_t>(r);
    }
  auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto inverse = [p](std::int64_t x) {
    std::int64_t result = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) result = result * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return result;
  };
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(at(rank, j), at(piv, j));
    const std::int64_t inv = inverse(at(rank, col));
    for (int i = rank + 1; i < n; ++i) {
      if (at(i, col) == 0) continue;
      const std::int64_t f = at(i, col) * inv % p;
      for (int j = col; j < n; ++j) at(i, j) = ((at(i, j) - f * at(rank, j)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

inline int p_valuation(BigInt x, long long p) {
  if (x == 0) return kInfiniteValuation;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

/// p-adic valuations of every diagonal entry of the SNF, in chain order;
/// zero entries map to kInfiniteValuation.
inline std::vector<int> p_part_divisors(const SnfResult& s, long long p) {
  require_prime(p);
  std::vector<int> out;
  out.reserve(s.factors.size() + s.zeros);
  for (const auto& f : s.factors) out.push_back(p_valuation(f, p));
  out.insert(out.end(), s.zeros, kInfiniteValuation);
  return out;
}

inline std::vector<int> p_part_divisors(const BigIntMatrix& m, long long p) {
  require_prime(p);
  return p_part_divisors(snf(m), p);
}

}  // namespace cospec
