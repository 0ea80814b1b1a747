#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

inline constexpr int kMaxVertices = 64;

/// Simple undirected graph on at most 64 vertices, stored as one adjacency
/// bitset per vertex. Row i bit j set iff {i,j} is an edge.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(n));
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
  }

  static Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
  }

  static Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
  }

  static Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
  }

  static Graph complete_bipartite(int m, int n) {
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }

  std::uint64_t row(int v) const { return adj_[v]; }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
  }

  int degree(int v) const { return std::popcount(adj_[v]); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  /// Mask with the low n bits set.
  std::uint64_t vertex_mask() const {
    return n_ == kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  /// Relabels so that vertex perm[i] of *this becomes vertex i of the result.
  Graph relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) pos[perm[i]] = i;
    Graph h(n_);
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = adj_[perm[i]];
      std::uint64_t out = 0;
      while (r) {
        int u = std::countr_zero(r);
        r &= r - 1;
        out |= std::uint64_t{1} << pos[u];
      }
      h.adj_[i] = out;
    }
    return h;
  }

  /// Adds a vertex adjacent to every vertex in `neighbours`.
  Graph with_extra_vertex(std::uint64_t neighbours) const {
    Graph h(n_ + 1);
    for (int v = 0; v < n_; ++v) h.adj_[v] = adj_[v] | (((neighbours >> v) & 1U) << n_);
    h.adj_[n_] = neighbours & vertex_mask();
    return h;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Breadth-first search from vertex 0.
inline bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  const std::uint64_t all = g.vertex_mask();
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.row(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

/// Thrown when a distance-based quantity is requested for a disconnected graph.
class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError(int u, int v)
      : std::runtime_error("graph is disconnected: no path between vertices " + std::to_string(u) +
                           " and " + std::to_string(v)) {}
};

/// All-pairs shortest-path lengths as a row-major n*n table, one BFS per source.
inline std::vector<int> distances(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
  for (int s = 0; s < n; ++s) {
    int* row = dist.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    int level = 0;
    while (frontier) {
      ++level;
      std::uint64_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= g.row(v);
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
      for (std::uint64_t m = next; m; m &= m - 1) row[std::countr_zero(m)] = level;
    }
    for (int t = 0; t < n; ++t)
      if (row[t] < 0) throw DisconnectedGraphError(s, t);
  }
  return dist;
}

}  // namespace cospec
