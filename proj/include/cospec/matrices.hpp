#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/matrix.hpp"

namespace cospec {

enum class MatrixKind { A, L, Q, D, DL, DQ };

inline constexpr std::array<MatrixKind, 6> kAllMatrixKinds{MatrixKind::A, MatrixKind::L, MatrixKind::Q,
                                                          MatrixKind::D, MatrixKind::DL, MatrixKind::DQ};

inline std::string_view to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::A: return "A";
    case MatrixKind::L: return "L";
    case MatrixKind::Q: return "Q";
    case MatrixKind::D: return "D";
    case MatrixKind::DL: return "DL";
    case MatrixKind::DQ: return "DQ";
  }
  return "?";
}

inline std::optional<MatrixKind> parse_matrix_kind(std::string_view s) {
  for (MatrixKind k : kAllMatrixKinds)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

inline bool is_distance_kind(MatrixKind k) {
  return k == MatrixKind::D || k == MatrixKind::DL || k == MatrixKind::DQ;
}

inline BigIntMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  const auto dist = distances(g);
  BigIntMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d(i, j) = dist[static_cast<std::size_t>(i) * n + j];
  return d;
}

/// tr(u): sum of distances from u to every vertex.
inline std::vector<long long> transmission(const Graph& g) {
  const int n = g.order();
  const auto dist = distances(g);
  std::vector<long long> tr(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tr[i] += dist[static_cast<std::size_t>(i) * n + j];
  return tr;
}

/// diag(d) + D(G).
inline BigIntMatrix generalized_distance_matrix(const Graph& g, const std::vector<BigInt>& d) {
  if (static_cast<int>(d.size()) != g.order())
    throw std::invalid_argument("diagonal vector has length " + std::to_string(d.size()) + ", graph has " +
                                std::to_string(g.order()) + " vertices");
  BigIntMatrix m = distance_matrix(g);
  for (int i = 0; i < g.order(); ++i) m(i, i) += d[i];
  return m;
}

template <typename T>
SquareMatrix<T> build_matrix_as(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  SquareMatrix<T> m(n);
  switch (kind) {
    case MatrixKind::A:
    case MatrixKind::L:
    case MatrixKind::Q: {
      const int off = kind == MatrixKind::L ? -1 : 1;
      for (int i = 0; i < n; ++i) {
        if (kind != MatrixKind::A) m(i, i) = T(g.degree(i));
        for (int j = 0; j < n; ++j)
          if (g.has_edge(i, j)) m(i, j) = T(off);
      }
      return m;
    }
    case MatrixKind::D:
    case MatrixKind::DL:
    case MatrixKind::DQ: {
      const auto dist = distances(g);
      const int sign = kind == MatrixKind::DL ? -1 : 1;
      for (int i = 0; i < n; ++i) {
        long long tr = 0;
        for (int j = 0; j < n; ++j) {
          const int dij = dist[static_cast<std::size_t>(i) * n + j];
          tr += dij;
          if (i != j) m(i, j) = T(sign * dij);
        }
        if (kind != MatrixKind::D) m(i, i) = T(tr);
      }
      return m;
    }
  }
  throw std::invalid_argument("unknown matrix kind");
}

inline BigIntMatrix build_matrix(const Graph& g, MatrixKind kind) { return build_matrix_as<BigInt>(g, kind); }

}  // namespace cospec
