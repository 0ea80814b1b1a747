#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"

namespace cospec {

inline constexpr int kMaxCanonicalOrder = 20;

namespace detail {

// Ordered partition of the vertex set; each cell is a bitmask.
struct OrderedPartition {
  std::array<std::uint64_t, kMaxVertices> cells{};
  int count = 0;
};

// Splits every cell by the number of neighbours in each splitter cell,
// sub-cells ordered by increasing count, until the partition is equitable.
// Only structural information drives the splits, so the result commutes with
// relabeling.
inline void refine(const Graph& g, OrderedPartition& p) {
  std::array<std::uint64_t, kMaxVertices> out{};
  std::array<std::uint64_t, kMaxVertices + 1> by_count{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.count && !changed; ++s) {
      const std::uint64_t splitter = p.cells[s];
      int m = 0;
      for (int c = 0; c < p.count; ++c) {
        const std::uint64_t cell = p.cells[c];
        if (std::has_single_bit(cell)) {
          out[m++] = cell;
          continue;
        }
        int lo = kMaxVertices, hi = 0;
        for (std::uint64_t r = cell; r; r &= r - 1) {
          const int v = std::countr_zero(r);
          const int k = std::popcount(g.row(v) & splitter);
          by_count[k] |= std::uint64_t{1} << v;
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) {
          by_count[lo] = 0;
          out[m++] = cell;
          continue;
        }
        changed = true;
        for (int k = lo; k <= hi; ++k)
          if (by_count[k]) {
            out[m++] = by_count[k];
            by_count[k] = 0;
          }
      }
      if (changed) {
        p.cells = out;
        p.count = m;
      }
    }
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  Graph run() {
    OrderedPartition p;
    if (n_ > 0) {
      p.cells[0] = g_.vertex_mask();
      p.count = 1;
    }
    search(p);
    return best_;
  }

  std::size_t leaves() const { return leaves_; }
  const std::vector<std::vector<int>>& generators() const { return generators_; }

 private:
  void search(OrderedPartition p) {
    refine(g_, p);
    if (p.count == n_) {
      leaf(p);
      return;
    }
    int target = 0;
    while (std::has_single_bit(p.cells[target])) ++target;
    const std::uint64_t cell = p.cells[target];
    std::uint64_t explored = 0;
    for (std::uint64_t r = cell; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (explored && equivalent_to_explored(v, explored)) continue;
      explored |= std::uint64_t{1} << v;

      OrderedPartition child;
      child.count = p.count + 1;
      for (int c = 0, d = 0; c < p.count; ++c) {
        if (c == target) {
          child.cells[d++] = std::uint64_t{1} << v;
          child.cells[d++] = cell & ~(std::uint64_t{1} << v);
        } else {
          child.cells[d++] = p.cells[c];
        }
      }
      prefix_.push_back(v);
      search(child);
      prefix_.pop_back();
    }
  }

  // True when v shares an orbit with an explored sibling under the group
  // generated by the known automorphisms that fix the current prefix.
  bool equivalent_to_explored(int v, std::uint64_t explored) const {
    std::array<int, kMaxVertices> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (int u : prefix_)
        if (gen[u] != u) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gen[x]);
    }
    const int root = find(v);
    for (std::uint64_t r = explored; r; r &= r - 1)
      if (find(std::countr_zero(r)) == root) return true;
    return false;
  }

  void leaf(const OrderedPartition& p) {
    ++leaves_;
    std::vector<int> lab(n_);
    for (int i = 0; i < n_; ++i) lab[i] = std::countr_zero(p.cells[i]);
    Graph h = g_.relabeled(lab);
    if (!have_best_) {
      have_best_ = true;
      best_ = h;
      best_lab_ = lab;
      first_ = h;
      first_lab_ = lab;
      return;
    }
    if (h == first_) record_automorphism(lab, first_lab_);
    const int cmp = compare(h, best_);
    if (cmp < 0) {
      best_ = h;
      best_lab_ = lab;
    } else if (cmp == 0 && !(best_ == first_)) {
      record_automorphism(lab, best_lab_);
    }
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gen(n_);
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gen[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) generators_.push_back(std::move(gen));
  }

  int compare(const Graph& a, const Graph& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a.row(i) != b.row(i)) return a.row(i) < b.row(i) ? -1 : 1;
    }
    return 0;
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  Graph best_, first_;
  std::vector<int> best_lab_, first_lab_;
  std::vector<int> prefix_;
  std::vector<std::vector<int>> generators_;
  std::size_t leaves_ = 0;
};

}  // namespace detail

/// Canonical representative of the isomorphism class of g: the relabeled
/// copy minimizing the adjacency rows over all leaves of the refinement
/// search tree.
inline Graph canonical_graph(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical labeling supports at most " + std::to_string(kMaxCanonicalOrder) +
                                " vertices, got " + std::to_string(g.order()));
  return detail::CanonicalSearch(g).run();
}

/// graph6 encoding of canonical_graph(g); equal iff the graphs are isomorphic.
inline std::string canonical_form(const Graph& g) { return write_graph6(canonical_graph(g)); }

}  // namespace cospec
