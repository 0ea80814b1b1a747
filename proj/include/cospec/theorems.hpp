#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospec/enumerate.hpp"
#include "cospec/invariants.hpp"
#include "cospec/matrices.hpp"
#include "cospec/minors.hpp"
#include "cospec/parallel.hpp"
#include "cospec/snf.hpp"
#include "cospec/stream.hpp"

namespace cospec {

namespace detail {

inline SnfResult snf_from_diagonal(const std::vector<BigInt>& diag) {
  SnfResult r;
  for (const auto& d : diag) {
    if (d == 0) {
      ++r.zeros;
    } else {
      r.factors.push_back(d);
    }
  }
  return r;
}

}  // namespace detail

/// SNF of the distance matrix of any tree on n + 1 vertices:
/// I_2 + 2 I_{n-2} + (2n). Orders of at most three vertices are computed
/// directly from the path, where the closed form does not apply.
inline SnfResult expected_tree_distance_snf(int n) {
  if (n < 1) throw std::invalid_argument("tree needs at least two vertices (n >= 1)");
  if (n + 1 <= 3) return snf(distance_matrix(Graph::path(n + 1)));
  std::vector<BigInt> diag{1, 1};
  diag.insert(diag.end(), n - 2, BigInt(2));
  diag.push_back(BigInt(2 * n));
  return detail::snf_from_diagonal(diag);
}

/// Closed-form SNF of D, D^L or D^Q for the complete graph K_n.
inline SnfResult expected_complete_snf(int n, MatrixKind kind) {
  if (n < 2) throw std::invalid_argument("complete-graph closed forms need n >= 2");
  std::vector<BigInt> diag;
  switch (kind) {
    case MatrixKind::D:  // I_{n-1} + (n-1)
      diag.assign(n - 1, BigInt(1));
      diag.push_back(BigInt(n - 1));
      break;
    case MatrixKind::DL:  // 1 + n I_{n-2} + 0
      diag.push_back(1);
      diag.insert(diag.end(), n - 2, BigInt(n));
      diag.push_back(0);
      break;
    case MatrixKind::DQ:  // 1 + (n-2) I_{n-2} + 2(n-1)(n-2)
      diag.push_back(1);
      diag.insert(diag.end(), n - 2, BigInt(n - 2));
      diag.push_back(BigInt(2 * (n - 1) * (n - 2)));
      break;
    default:
      throw std::invalid_argument("no complete-graph closed form for kind " + std::string(to_string(kind)));
  }
  return detail::snf_from_diagonal(diag);
}

struct TreeLevelReport {
  int n = 0;
  std::uint64_t trees = 0;
  std::uint64_t distinct = 0;
  std::uint64_t mates = 0;            // trees whose key is shared
  std::uint64_t pairs = 0;            // sum over buckets of C(k, 2)
  std::uint64_t largest_bucket = 0;
  bool formula_ok = true;             // D only: every tree matches the closed form
};

struct TreeReport {
  MatrixKind kind = MatrixKind::D;
  InvariantType type = InvariantType::IN;
  std::vector<TreeLevelReport> levels;
  bool passed = true;
};

namespace detail {

inline TreeLevelReport tree_level(int n, InvariantPart part, int jobs) {
  TreeLevelReport level;
  level.n = n;
  const auto trees = enumerate_trees(n);
  std::vector<std::string> keys(trees.size());
  parallel_for(trees.size(), jobs, [&](std::size_t i) { keys[i] = InvariantCache(trees[i]).part(part); });
  std::map<std::string, std::uint64_t> buckets;
  for (auto& k : keys) ++buckets[std::move(k)];
  level.trees = trees.size();
  level.distinct = buckets.size();
  for (const auto& [k, size] : buckets) {
    if (size >= 2) level.mates += size;
    level.pairs += size * (size - 1) / 2;
    level.largest_bucket = std::max(level.largest_bucket, size);
  }
  if (part.kind == MatrixKind::D && part.type == InvariantType::IN && n >= 2) {
    const std::string expected = encode_part(part, expected_tree_distance_snf(n - 1));
    level.formula_ok = buckets.size() == 1 && buckets.begin()->first == expected;
  }
  return level;
}

}  // namespace detail

/// For D: every tree on n vertices shares the closed-form SNF. For D^L and
/// D^Q: counts trees with a coinvariant mate (expected to be zero).
inline TreeReport verify_tree_coinvariance(int max_n, MatrixKind kind, int jobs = 1, int min_n = 1) {
  if (!is_distance_kind(kind)) throw std::invalid_argument("tree coinvariance is checked for D, DL and DQ only");
  if (max_n > kMaxTreeOrder) throw std::out_of_range("trees are enumerated up to 20 vertices");
  TreeReport report;
  report.kind = kind;
  report.type = InvariantType::IN;
  for (int n = std::max(min_n, 1); n <= max_n; ++n) {
    auto level = detail::tree_level(n, {kind, InvariantType::IN}, jobs);
    if (kind == MatrixKind::D) {
      report.passed = report.passed && level.formula_ok && level.distinct == 1;
    } else {
      report.passed = report.passed && level.mates == 0;
    }
    report.levels.push_back(level);
  }
  return report;
}

/// Unordered D-cospectral pairs among the trees on n vertices.
inline TreeLevelReport verify_tree_d_cospectral(int n, int jobs = 1) {
  if (n > kMaxTreeOrder) throw std::out_of_range("trees are enumerated up to 20 vertices");
  return detail::tree_level(n, {MatrixKind::D, InvariantType::SP}, jobs);
}

struct DqLevelReport {
  int n = 0;
  std::uint64_t graphs = 0;
  SnfResult complete_snf;
  std::uint64_t sharing_complete_snf = 0;  // non-complete graphs with SNF(D^Q) equal to K_n's
  std::vector<std::string> at_most_one_unit;  // graph6 of graphs with <= 1 unit invariant factor
  bool complete_in_set = false;
  bool informational = false;  // n <= 3: outside the theorem's hypothesis
  bool passed = true;
};

struct DqReport {
  std::vector<DqLevelReport> levels;
  bool passed = true;
};

/// Scans all connected graphs on each order up to max_n: K_n must be the only
/// graph with SNF(D^Q(K_n)) and, for n >= 4, the only one whose SNF(D^Q) has at
/// most one invariant factor equal to 1.
inline DqReport verify_dq_characterization(int max_n, int min_n = 1) {
  DqReport report;
  for (int n = std::max(min_n, 1); n <= max_n; ++n) {
    DqLevelReport level;
    level.n = n;
    level.informational = n <= 3;
    const Graph kn = Graph::complete(n);
    const std::string kn_code = canonical_form(kn);
    level.complete_snf = snf(build_matrix(kn, MatrixKind::DQ));
    for (const auto& code : connected_graph6_codes(n)) {
      const Graph g = parse_graph6(code);
      ++level.graphs;
      const SnfResult s = snf(build_matrix(g, MatrixKind::DQ));
      const bool is_complete = code == kn_code;
      if (!is_complete && s == level.complete_snf) ++level.sharing_complete_snf;
      if (s.unit_factors() <= 1) {
        level.at_most_one_unit.push_back(code);
        if (is_complete) level.complete_in_set = true;
      }
    }
    const bool only_complete = level.at_most_one_unit.size() == 1 && level.complete_in_set;
    level.passed = level.sharing_complete_snf == 0 && (level.informational || only_complete);
    report.passed = report.passed && level.passed;
    report.levels.push_back(std::move(level));
  }
  return report;
}

/// Second invariant factor of SNF(D^Q(K_{m,n})).
inline BigInt complete_bipartite_dq_second_factor(int m, int n) {
  const SnfResult s = snf(build_matrix(Graph::complete_bipartite(m, n), MatrixKind::DQ));
  if (s.rank() < 2) throw std::logic_error("D^Q of K_{m,n} has rank below 2");
  return s.factors[1];
}

/// gcd of the second distance ideal generators of K_{m,1} evaluated at the
/// transmissions x_i = 2m - 1, y_1 = m: gcd(x_i - 2, 2 y_1 - 1).
inline long long star_ideal_evaluation_gcd(int m) {
  const long long x = 2LL * m - 1, y = m;
  return std::gcd(x - 2, 2 * y - 1);
}

/// Same evaluation for K_{m,n}, m, n >= 2, at x_i = 2m + n - 2, y_j = 2n + m - 2:
/// gcd(x_i - 2, y_j - 2, 3).
inline long long bipartite_ideal_evaluation_gcd(int m, int n) {
  const long long x = 2LL * m + n - 2, y = 2LL * n + m - 2;
  return std::gcd(std::gcd(x - 2, y - 2), 3LL);
}

/// |det D(T)| for a tree on n + 1 vertices: n 2^{n-1}.
inline BigInt tree_distance_abs_determinant(int n) {
  if (n < 1) throw std::invalid_argument("n >= 1");
  BigInt r = n;
  for (int i = 1; i < n; ++i) r *= 2;
  return r;
}

}  // namespace cospec
