#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "cospec/canonical.hpp"
#include "cospec/census.hpp"
#include "cospec/minors.hpp"
#include "cospec/report.hpp"

using namespace cospec;

namespace {

std::vector<InvariantSpec> parse_all(std::initializer_list<const char*> texts) {
  std::vector<InvariantSpec> out;
  for (const char* t : texts) out.push_back(InvariantSpec::parse(t));
  return out;
}

CensusReport census_of(const std::vector<Graph>& graphs, const std::vector<InvariantSpec>& specs,
                       CensusOptions opt = {}) {
  GraphStream s = GraphStream::from_graphs(graphs);
  return run_census(s, specs, opt);
}

// raw invariant tuple of one part, compared structurally rather than through keys
struct RawPart {
  std::optional<CharPoly> poly;
  std::optional<SnfResult> smith;
  bool operator==(const RawPart&) const = default;
};

RawPart raw(const Graph& g, InvariantPart p) {
  const BigIntMatrix m = build_matrix(g, p.kind);
  if (p.type == InvariantType::SP) return {char_poly(m), std::nullopt};
  return {std::nullopt, snf(m)};
}

}  // namespace

TEST(Spec, ParseAndLabel) {
  const InvariantSpec s = InvariantSpec::parse("A:sp,DL:in,DQ:in");
  ASSERT_EQ(s.parts.size(), 3u);
  EXPECT_EQ(s.parts[1].kind, MatrixKind::DL);
  EXPECT_EQ(s.parts[1].type, InvariantType::IN);
  EXPECT_EQ(s.label(), "A:sp,DL:in,DQ:in");
  EXPECT_TRUE(s.needs_distances());
  EXPECT_FALSE(InvariantSpec::parse("Q:sp").needs_distances());
  for (const char* bad : {"", "A", "A:xx", "Z:sp", "A:sp,", "A:sp,,L:in"})
    EXPECT_THROW(InvariantSpec::parse(bad), std::invalid_argument) << bad;
}

TEST(Key, RelabelingInvariance) {
  const InvariantSpec spec = InvariantSpec::parse("A:sp,L:in,D:sp,DL:in,DQ:sp,Q:in");
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}});
  EXPECT_EQ(key_of(g, spec), key_of(g.relabeled({5, 3, 1, 0, 2, 4}), spec));
  EXPECT_EQ(key_of(Graph::complete(3), spec), key_of(Graph::complete(3).relabeled({2, 0, 1}), spec));
}

TEST(Key, EncodingIsInjectiveOnParts) {
  // factors (1, 12) vs (11, 2): naive concatenation would collide
  const InvariantPart p{MatrixKind::A, InvariantType::IN};
  EXPECT_NE(encode_part(p, SnfResult{{1, 12}, 0}), encode_part(p, SnfResult{{11, 2}, 0}));
  EXPECT_NE(encode_part(p, SnfResult{{1}, 1}), encode_part(p, SnfResult{{1, 1}, 0}));
  EXPECT_NE(encode_part(p, SnfResult{{1}, 0}), encode_part({MatrixKind::L, InvariantType::IN}, SnfResult{{1}, 0}));
}

TEST(Key, FastPathMatchesExactEncoding) {
  for (const auto& g : enumerate_connected(6))
    for (MatrixKind k : kAllMatrixKinds) {
      const BigIntMatrix m = build_matrix(g, k);
      EXPECT_EQ(InvariantCache(g).part({k, InvariantType::SP}), encode_part({k, InvariantType::SP}, char_poly(m)));
      EXPECT_EQ(InvariantCache(g).part({k, InvariantType::IN}), encode_part({k, InvariantType::IN}, snf(m)));
    }
}

TEST(Census, SaltirePairUnderSignlessLaplacian) {
  const auto graphs = enumerate_connected(5);
  CensusOptions opt;
  opt.max_mate_groups = 10;
  const CensusReport r = census_of(graphs, parse_all({"Q:sp"}), opt);
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.universe, 21u);
  EXPECT_EQ(r.results[0].mates, 2u);
  ASSERT_EQ(r.results[0].mate_groups.size(), 1u);
  const auto& group = r.results[0].mate_groups[0];
  ASSERT_EQ(group.size(), 2u);
  const Graph a = parse_graph6(group[0]), b = parse_graph6(group[1]);
  EXPECT_NE(canonical_form(a), canonical_form(b));
  EXPECT_EQ(char_poly(build_matrix(a, MatrixKind::Q)), char_poly(build_matrix(b, MatrixKind::Q)));
  EXPECT_EQ(a.edge_count(), b.edge_count());
}

TEST(Census, KnownCountsAtSix) {
  const CensusReport r = census_of(enumerate_connected(6), parse_all({"Q:sp", "A:sp", "D:sp"}));
  EXPECT_EQ(r.results[0].mates, 10u);
  EXPECT_EQ(format_ratio(r.uncertainty(0)), "0.0892857142857143");
}

TEST(Census, BruteForceAllPairsUpToSix) {
  const auto specs = parse_all({"A:sp", "L:sp", "Q:sp", "D:sp", "DL:sp", "DQ:sp", "A:in", "L:in", "Q:in", "D:in",
                                "DL:in", "DQ:in", "DL:sp,DQ:sp", "A:sp,DL:in", "D:in,DL:in,DQ:in"});
  for (int n = 3; n <= 6; ++n) {
    const auto graphs = enumerate_connected(n);
    const CensusReport r = census_of(graphs, specs);
    for (std::size_t s = 0; s < specs.size(); ++s) {
      std::vector<std::vector<RawPart>> tuples;
      for (const auto& g : graphs) {
        std::vector<RawPart> t;
        for (const auto& p : specs[s].parts) t.push_back(raw(g, p));
        tuples.push_back(std::move(t));
      }
      std::uint64_t mates = 0;
      for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = 0; j < graphs.size(); ++j)
          if (i != j && tuples[i] == tuples[j]) {
            ++mates;
            break;
          }
      EXPECT_EQ(r.results[s].mates, mates) << "n=" << n << " " << specs[s].label();
    }
  }
}

TEST(Census, OrderInvarianceUnderShuffle) {
  auto graphs = enumerate_connected(7);
  const auto specs = parse_all({"A:sp", "D:sp", "DL:sp,DQ:sp", "L:in"});
  const CensusReport base = census_of(graphs, specs);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(graphs.begin(), graphs.end(), rng);
    for (auto& g : graphs) {
      std::vector<int> p(g.order());
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      g = g.relabeled(p);
    }
    CensusOptions opt;
    opt.jobs = 1 + trial;
    opt.batch_size = 50 + 100 * trial;
    const CensusReport r = census_of(graphs, specs, opt);
    for (std::size_t s = 0; s < specs.size(); ++s) {
      EXPECT_EQ(r.results[s].mates, base.results[s].mates);
      EXPECT_EQ(r.results[s].histogram, base.results[s].histogram);
    }
    EXPECT_EQ(emit_report(r, ReportFormat::TSV), emit_report(base, ReportFormat::TSV));
  }
}

TEST(Census, RefinementIsMonotone) {
  const auto specs = parse_all({"DL:sp", "DL:sp,DQ:sp", "DL:sp,DQ:sp,A:in", "A:sp", "A:sp,A:in"});
  const CensusReport r = census_of(enumerate_connected(7), specs);
  EXPECT_LE(r.results[1].mates, r.results[0].mates);
  EXPECT_LE(r.results[2].mates, r.results[1].mates);
  EXPECT_LE(r.results[4].mates, r.results[3].mates);
}

TEST(Census, DuplicatedPartIsIdempotent) {
  const CensusReport r = census_of(enumerate_connected(7), parse_all({"A:sp", "A:sp,A:sp"}));
  EXPECT_EQ(r.results[0].mates, r.results[1].mates);
  EXPECT_EQ(r.results[0].histogram, r.results[1].histogram);
}

TEST(Census, HistogramTotalsUniverse) {
  const CensusReport r = census_of(enumerate_connected(7), parse_all({"A:sp", "L:in", "DQ:in"}));
  for (const auto& sc : r.results) {
    std::uint64_t total = 0, buckets = 0, mates = 0;
    for (const auto& [size, count] : sc.histogram) {
      total += size * count;
      buckets += count;
      if (size >= 2) mates += size * count;
    }
    EXPECT_EQ(total, r.universe);
    EXPECT_EQ(buckets, sc.distinct);
    EXPECT_EQ(mates, sc.mates);
  }
}

TEST(Census, SnfMatesShareAbsoluteDeterminant) {
  const auto graphs = enumerate_connected(6);
  for (MatrixKind k : kAllMatrixKinds) {
    const InvariantSpec spec{{{k, InvariantType::IN}}};
    std::map<std::string, BigInt> det_of;
    for (const auto& g : graphs) {
      const BigIntMatrix m = build_matrix(g, k);
      const SnfResult s = snf(m);
      if (s.zeros != 0) continue;
      const BigInt d = abs_value(determinant(m));
      auto [it, inserted] = det_of.emplace(key_of(g, spec), d);
      EXPECT_EQ(it->second, d);
    }
  }
}

TEST(Census, AllDistinctGivesZero) {
  const CensusReport r = census_of(enumerate_connected(5), parse_all({"A:sp,L:sp,Q:sp"}));
  // no 5-vertex pair shares all three spectra
  EXPECT_EQ(r.results[0].mates, 0u);
  EXPECT_EQ(r.results[0].distinct, 21u);
}

TEST(Census, TwoPassMatchesMemoryMode) {
  const auto graphs = enumerate_connected(7);
  const auto specs = parse_all({"A:sp", "L:sp", "D:sp", "DL:in", "DL:sp,DQ:sp", "A:sp,DL:in"});
  const CensusReport mem = census_of(graphs, specs);
  CensusOptions opt;
  opt.two_pass = true;
  opt.jobs = 3;
  const CensusReport two = census_of(graphs, specs, opt);
  EXPECT_TRUE(two.two_pass);
  for (std::size_t s = 0; s < specs.size(); ++s) {
    EXPECT_EQ(two.results[s].mates, mem.results[s].mates) << specs[s].label();
    EXPECT_EQ(two.results[s].histogram, mem.results[s].histogram) << specs[s].label();
    EXPECT_EQ(two.results[s].distinct, mem.results[s].distinct) << specs[s].label();
  }
}

TEST(Census, TwoPassRefusesStandardInput) {
  GraphStream s = GraphStream::file("-", 5);
  CensusOptions opt;
  opt.two_pass = true;
  EXPECT_THROW(run_census(s, parse_all({"A:sp"}), opt), CensusError);
}

TEST(Census, DisconnectedRecordAborts) {
  GraphStream s = GraphStream::from_graphs({Graph::complete(3), Graph(3), Graph::path(3)});
  try {
    run_census(s, parse_all({"D:sp"}));
    FAIL();
  } catch (const StreamError& e) {
    EXPECT_EQ(e.record(), 2u);
  }
}

TEST(Report, RatioFormatting) {
  EXPECT_EQ(format_ratio(CensusReport::ratio(10, 112)), "0.0892857142857143");
  EXPECT_EQ(format_ratio(CensusReport::ratio(264955, 11716571)), "0.0226136981545198");
  EXPECT_EQ(format_ratio(CensusReport::ratio(0, 21)), "0");
  EXPECT_EQ(format_ratio(CensusReport::ratio(5, 0)), "0");
}

TEST(Report, EmptySpecListIsHeaderOnly) {
  const CensusReport r = census_of(enumerate_connected(4), {});
  EXPECT_EQ(emit_report(r, ReportFormat::TSV), "n\tspec\tuniverse\tmates\tratio\tdistinct\thistogram\n");
}

TEST(Report, TsvAndJsonContent) {
  const CensusReport r = census_of(enumerate_connected(6), parse_all({"Q:sp"}));
  const std::string tsv = emit_report(r, ReportFormat::TSV);
  EXPECT_EQ(tsv.substr(tsv.find('\n') + 1, 7), "6\tQ:sp\t");
  EXPECT_NE(tsv.find("\t112\t10\t0.0892857142857143\t"), std::string::npos) << tsv;
  const auto j = nlohmann::json::parse(emit_report(r, ReportFormat::JSON));
  EXPECT_EQ(j["universe"], 112);
  EXPECT_EQ(j["results"][0]["spec"], "Q:sp");
  EXPECT_EQ(j["results"][0]["mates"], 10);
  EXPECT_DOUBLE_EQ(j["results"][0]["ratio"].get<double>(), 0.0892857142857143);
  EXPECT_EQ(emit_report(r, ReportFormat::JSON), emit_report(census_of(enumerate_connected(6), parse_all({"Q:sp"})),
                                                             ReportFormat::JSON));
}
