#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cospec/graph6.hpp"
#include "cospec/invariants.hpp"
#include "cospec/parallel.hpp"
#include "cospec/stream.hpp"

namespace cospec {

class CensusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusOptions {
  int jobs = 1;
  bool two_pass = false;
  std::size_t batch_size = 4096;
  /// Number of mate groups (buckets of size >= 2) to list per spec, memory mode only.
  std::size_t max_mate_groups = 0;
};

struct SpecCount {
  InvariantSpec spec;
  std::uint64_t mates = 0;
  std::uint64_t distinct = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // bucket size -> number of buckets
  std::vector<std::vector<std::string>> mate_groups;  // graph6 members, first-seen order
};

struct CensusReport {
  int n = 0;
  std::uint64_t universe = 0;
  bool two_pass = false;
  std::string source;
  std::vector<SpecCount> results;

  static double ratio(std::uint64_t part, std::uint64_t whole) {
    return whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole);
  }
  double uncertainty(std::size_t i) const { return ratio(results.at(i).mates, universe); }
};

struct Hash128 {
  std::uint64_t hi = 0, lo = 0;
  friend bool operator==(const Hash128&, const Hash128&) = default;
  friend auto operator<=>(const Hash128&, const Hash128&) = default;
};

struct Hash128Hasher {
  std::size_t operator()(const Hash128& h) const { return static_cast<std::size_t>(h.lo ^ (h.hi * 31)); }
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace detail

inline Hash128 hash128(std::string_view s) {
  std::uint64_t a = 0x9e3779b97f4a7c15ULL ^ s.size();
  std::uint64_t b = 0xc2b2ae3d27d4eb4fULL + s.size();
  for (std::size_t i = 0; i < s.size(); i += 8) {
    std::uint64_t w = 0;
    std::memcpy(&w, s.data() + i, std::min<std::size_t>(8, s.size() - i));
    a = detail::mix64(a ^ w);
    b = detail::mix64(b + w * 0x9fb21c651e98df25ULL + 1);
  }
  return {detail::mix64(a ^ (b >> 17)), detail::mix64(b ^ (a << 13))};
}

namespace detail {

// Streams graphs in batches; `compute` runs in parallel within a batch and
// `consume` runs sequentially in stream order.
template <typename Result, typename Compute, typename Consume>
void batched(GraphStream& stream, const CensusOptions& opt, Compute&& compute, Consume&& consume) {
  std::vector<Graph> batch;
  std::vector<std::size_t> records;
  std::vector<Result> results;
  auto flush = [&] {
    results.assign(batch.size(), Result{});
    parallel_for(batch.size(), opt.jobs, [&](std::size_t i) { results[i] = compute(batch[i], records[i]); });
    for (std::size_t i = 0; i < batch.size(); ++i) consume(batch[i], records[i], std::move(results[i]));
    batch.clear();
    records.clear();
  };
  stream.for_each([&](const Graph& g, std::size_t record) {
    batch.push_back(g);
    records.push_back(record);
    if (batch.size() >= std::max<std::size_t>(opt.batch_size, 1)) flush();
  });
  flush();
}

inline std::vector<InvariantPart> distinct_parts(const std::vector<InvariantSpec>& specs) {
  std::vector<InvariantPart> parts;
  for (const auto& s : specs)
    for (const auto& p : s.parts)
      if (std::find(parts.begin(), parts.end(), p) == parts.end()) parts.push_back(p);
  return parts;
}

inline void finish_count(SpecCount& sc, std::uint64_t size, std::uint64_t buckets = 1) {
  sc.histogram[size] += buckets;
  sc.distinct += buckets;
  if (size >= 2) sc.mates += size * buckets;
}

inline CensusReport census_in_memory(GraphStream& stream, const std::vector<InvariantSpec>& specs,
                                     const CensusOptions& opt) {
  const auto parts = distinct_parts(specs);
  const std::size_t width = parts.size();
  std::array<int, kPartCount> column{};
  for (std::size_t c = 0; c < width; ++c) column[parts[c].index()] = static_cast<int>(c);

  std::vector<std::unordered_map<std::string, std::uint32_t>> interned(width);
  std::vector<std::uint32_t> ids;
  std::vector<std::string> codes;
  const bool keep_codes = opt.max_mate_groups > 0;

  batched<std::vector<std::string>>(
      stream, opt,
      [&](const Graph& g, std::size_t) {
        InvariantCache cache(g);
        std::vector<std::string> out(width);
        for (std::size_t c = 0; c < width; ++c) out[c] = cache.part(parts[c]);
        return out;
      },
      [&](const Graph& g, std::size_t, std::vector<std::string>&& encoded) {
        for (std::size_t c = 0; c < width; ++c) {
          auto [it, inserted] =
              interned[c].try_emplace(std::move(encoded[c]), static_cast<std::uint32_t>(interned[c].size()));
          ids.push_back(it->second);
        }
        if (keep_codes) codes.push_back(write_graph6(g));
      });

  CensusReport report;
  report.n = stream.order();
  report.universe = stream.emitted();
  report.source = stream.description();
  const std::size_t count = report.universe;

  for (const auto& spec : specs) {
    SpecCount sc;
    sc.spec = spec;
    std::unordered_map<std::string, std::uint64_t> buckets;
    buckets.reserve(count);
    std::vector<std::string> packed(keep_codes ? count : 0);
    std::string key;
    for (std::size_t i = 0; i < count; ++i) {
      key.clear();
      for (const auto& p : spec.parts) {
        const std::uint32_t id = ids[i * width + column[p.index()]];
        key.append(reinterpret_cast<const char*>(&id), sizeof id);
      }
      ++buckets[key];
      if (keep_codes) packed[i] = key;
    }
    for (const auto& [k, size] : buckets) finish_count(sc, size);

    if (keep_codes) {
      std::unordered_map<std::string, std::size_t> group_of;
      for (std::size_t i = 0; i < count; ++i) {
        if (buckets[packed[i]] < 2) continue;
        auto it = group_of.find(packed[i]);
        if (it == group_of.end()) {
          if (sc.mate_groups.size() >= opt.max_mate_groups) continue;
          it = group_of.emplace(packed[i], sc.mate_groups.size()).first;
          sc.mate_groups.emplace_back();
        }
        sc.mate_groups[it->second].push_back(codes[i]);
      }
    }
    report.results.push_back(std::move(sc));
  }
  return report;
}

// Pass one buckets 128-bit key hashes; pass two recomputes exact keys only
// for graphs whose hash collides with another graph's, so the published
// counts never depend on hash quality.
inline CensusReport census_two_pass(GraphStream& stream, const std::vector<InvariantSpec>& specs,
                                    const CensusOptions& opt) {
  if (!stream.rewindable())
    throw CensusError("memory-mode mismatch: two-pass census needs a rewindable source, not standard input");
  const std::size_t s_count = specs.size();
  std::vector<std::vector<Hash128>> hashes(s_count);

  batched<std::vector<Hash128>>(
      stream, opt,
      [&](const Graph& g, std::size_t) {
        InvariantCache cache(g);
        std::vector<Hash128> out(s_count);
        for (std::size_t s = 0; s < s_count; ++s) out[s] = hash128(cache.key(specs[s]));
        return out;
      },
      [&](const Graph&, std::size_t, std::vector<Hash128>&& h) {
        for (std::size_t s = 0; s < s_count; ++s) hashes[s].push_back(h[s]);
      });
  const std::size_t count = stream.emitted();

  std::vector<std::vector<bool>> candidate(s_count, std::vector<bool>(count, false));
  std::vector<std::uint64_t> candidates(s_count, 0);
  for (std::size_t s = 0; s < s_count; ++s) {
    std::vector<Hash128> sorted = hashes[s];
    std::sort(sorted.begin(), sorted.end());
    std::unordered_set<Hash128, Hash128Hasher> colliding;
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1]) colliding.insert(sorted[i]);
    for (std::size_t i = 0; i < count; ++i)
      if (colliding.count(hashes[s][i])) {
        candidate[s][i] = true;
        ++candidates[s];
      }
    std::vector<Hash128>().swap(hashes[s]);
  }

  std::vector<std::unordered_map<std::string, std::uint64_t>> exact(s_count);
  batched<std::vector<std::string>>(
      stream, opt,
      [&](const Graph& g, std::size_t record) {
        std::vector<std::string> keys(s_count);
        InvariantCache cache(g);
        for (std::size_t s = 0; s < s_count; ++s)
          if (candidate[s][record - 1]) keys[s] = cache.key(specs[s]);
        return keys;
      },
      [&](const Graph&, std::size_t record, std::vector<std::string>&& keys) {
        for (std::size_t s = 0; s < s_count; ++s)
          if (candidate[s][record - 1]) ++exact[s][std::move(keys[s])];
      });
  if (stream.emitted() != count) throw CensusError("stream changed between passes");

  CensusReport report;
  report.n = stream.order();
  report.universe = count;
  report.two_pass = true;
  report.source = stream.description();
  for (std::size_t s = 0; s < s_count; ++s) {
    SpecCount sc;
    sc.spec = specs[s];
    for (const auto& [k, size] : exact[s]) finish_count(sc, size);
    if (count > candidates[s]) finish_count(sc, 1, count - candidates[s]);
    report.results.push_back(std::move(sc));
  }
  return report;
}

}  // namespace detail

/// Counts, for every spec, the graphs of the stream that share their key
/// with at least one other graph. A bucket of k graphs contributes k.
inline CensusReport run_census(GraphStream& stream, const std::vector<InvariantSpec>& specs,
                               const CensusOptions& opt = {}) {
  return opt.two_pass ? detail::census_two_pass(stream, specs, opt) : detail::census_in_memory(stream, specs, opt);
}

}  // namespace cospec
