#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "cospec/canonical.hpp"
#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"

namespace cospec {

// Connected graphs are grown one vertex at a time; the n = 9 universe
// (261,080 graphs) is the largest level that fits in one in-memory set.
inline constexpr int kMaxGeneratedOrder = 9;
inline constexpr int kMaxTreeOrder = 20;

/// Canonical graph6 strings of every connected graph on n vertices, one per
/// isomorphism class, sorted lexicographically.
///
/// Every connected graph on n + 1 vertices has a non-cut vertex (a leaf of
/// any spanning tree), so joining a new vertex to each nonempty subset of
/// each n-vertex representative reaches every class; duplicates are removed
/// by canonical form.
inline std::vector<std::string> connected_graph6_codes(int n) {
  if (n < 1 || n > kMaxGeneratedOrder)
    throw std::out_of_range("built-in connected enumeration supports 1 <= n <= " +
                            std::to_string(kMaxGeneratedOrder) + ", got " + std::to_string(n) +
                            "; use a graph6 file for larger orders");
  std::vector<std::string> level{write_graph6(Graph(1))};
  for (int m = 1; m < n; ++m) {
    std::unordered_set<std::string> next;
    const std::uint64_t subsets = std::uint64_t{1} << m;
    for (const auto& code : level) {
      const Graph g = parse_graph6(code);
      for (std::uint64_t s = 1; s < subsets; ++s) next.insert(canonical_form(g.with_extra_vertex(s)));
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

inline std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for (const auto& code : connected_graph6_codes(n)) out.push_back(parse_graph6(code));
  return out;
}

/// Free trees via the Wright-Richmond-Odlyzko-McKay successor on canonical
/// level sequences (preorder depths of the tree rooted at its centre).
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n) : n_(n) {
    if (n < 1 || n > kMaxTreeOrder)
      throw std::out_of_range("tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeOrder) +
                              ", got " + std::to_string(n));
    if (n >= 2) {
      // the path rooted at its centre
      for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
      for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
    }
  }

  /// Advances to the next tree; false once every tree has been produced.
  bool next(std::vector<int>& level_sequence) {
    if (done_) return false;
    if (n_ == 1) {
      done_ = true;
      level_sequence = {0};
      return true;
    }
    if (!make_valid()) {
      done_ = true;
      return false;
    }
    level_sequence = layout_;
    if (!next_rooted(last_nonone())) done_ = true;
    return true;
  }

  static Graph to_graph(const std::vector<int>& levels) {
    const int n = static_cast<int>(levels.size());
    Graph g(n);
    std::vector<int> last_at_depth(n + 1, -1);
    for (int i = 0; i < n; ++i) {
      const int d = levels[i];
      if (d > 0) g.add_edge(last_at_depth[d - 1], i);
      last_at_depth[d] = i;
    }
    return g;
  }

 private:
  int last_nonone() const {
    int p = n_ - 1;
    while (p > 0 && layout_[p] == 1) --p;
    return p;
  }

  // Beyer-Hedetniemi rooted-tree successor applied at position p.
  bool next_rooted(int p) {
    if (p == 0) return false;
    int q = p - 1;
    while (layout_[q] != layout_[p] - 1) --q;
    for (int i = p; i < n_; ++i) layout_[i] = layout_[i - p + q];
    return true;
  }

  // Position of the second depth-1 vertex (start of the rest after removing
  // the leftmost root subtree), or n when there is only one.
  int split_point() const {
    bool seen_one = false;
    for (int i = 0; i < n_; ++i)
      if (layout_[i] == 1) {
        if (seen_one) return i;
        seen_one = true;
      }
    return n_;
  }

  // A level sequence is a canonical free tree when the leftmost root subtree
  // is no taller than the remainder, and on a height tie is no larger and
  // lexicographically no later. Otherwise jump ahead to the next candidate.
  bool make_valid() {
    for (;;) {
      const int m = split_point();
      int left_height = 0, rest_height = 0;
      for (int i = 1; i < m; ++i) left_height = std::max(left_height, layout_[i] - 1);
      for (int i = m; i < n_; ++i) rest_height = std::max(rest_height, layout_[i]);
      const int left_size = m - 1;
      const int rest_size = 1 + (n_ - m);
      bool valid = rest_height >= left_height;
      if (valid && rest_height == left_height) {
        if (left_size > rest_size) {
          valid = false;
        } else if (left_size == rest_size) {
          // compare left = (layout[1..m) - 1) against rest = (0, layout[m..n))
          std::vector<int> left, rest{0};
          for (int i = 1; i < m; ++i) left.push_back(layout_[i] - 1);
          for (int i = m; i < n_; ++i) rest.push_back(layout_[i]);
          if (left > rest) valid = false;
        }
      }
      if (valid) return true;

      const bool reset_suffix = layout_[left_size] > 2;
      if (!next_rooted(left_size)) return false;
      if (reset_suffix) {
        int new_left_height = 0;
        const int nm = split_point();
        for (int i = 1; i < nm; ++i) new_left_height = std::max(new_left_height, layout_[i] - 1);
        const int len = new_left_height + 1;
        for (int k = 0; k < len; ++k) layout_[n_ - len + k] = k + 1;
      }
    }
  }

  int n_;
  std::vector<int> layout_;
  bool done_ = false;
};

inline std::vector<Graph> enumerate_trees(int n) {
  FreeTreeGenerator gen(n);
  std::vector<Graph> out;
  std::vector<int> levels;
  while (gen.next(levels)) out.push_back(FreeTreeGenerator::to_graph(levels));
  return out;
}

}  // namespace cospec
