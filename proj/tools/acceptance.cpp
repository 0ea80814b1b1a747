// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance [--long] [--only 1,5,9] [--jobs K] [--workdir DIR]
//
// --long (or COSPEC_LONG=1) adds the optional tree runs of criterion 9:
// coinvariance for 17..20 vertices and D-cospectral pairs at 18, 19, 20.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cospec/cospec.hpp"

namespace {

using namespace cospec;

struct Outcome {
  bool passed = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [MISMATCH]");
    passed = passed && ok;
  }
  template <typename T>
  void expect_eq(const std::string& label, const T& got, const T& want) {
    std::ostringstream os;
    os << label << '=' << got;
    if (!(got == want)) os << " (expected " << want << ')';
    expect(got == want, os.str());
  }
};

struct Criterion {
  int id;
  double budget_seconds;  // 0: no time bound
  std::function<Outcome()> run;
};

struct Context {
  int jobs = 1;
  bool long_run = false;
  std::filesystem::path workdir;
  std::map<int, std::vector<Graph>> universes;

  const std::vector<Graph>& universe(int n) {
    auto it = universes.find(n);
    if (it == universes.end()) it = universes.emplace(n, enumerate_connected(n)).first;
    return it->second;
  }
};

using Expectations = std::vector<std::pair<std::string, std::uint64_t>>;

std::vector<InvariantSpec> specs_of(const Expectations& ex) {
  std::vector<InvariantSpec> specs;
  for (const auto& [label, count] : ex) specs.push_back(InvariantSpec::parse(label));
  return specs;
}

void check_census(Outcome& out, GraphStream stream, const Expectations& ex, int jobs) {
  CensusOptions opt;
  opt.jobs = jobs;
  const CensusReport r = run_census(stream, specs_of(ex), opt);
  for (std::size_t i = 0; i < ex.size(); ++i)
    out.expect_eq("n=" + std::to_string(r.n) + " " + ex[i].first, r.results[i].mates, ex[i].second);
}

Outcome criterion_universe(Context& ctx) {
  Outcome out;
  const std::uint64_t expected[] = {21, 112, 853, 11117};
  for (int n = 5; n <= 8; ++n)
    out.expect_eq("|G_" + std::to_string(n) + "|", static_cast<std::uint64_t>(ctx.universe(n).size()),
                  expected[n - 5]);
  return out;
}

Outcome criterion_tables(Context& ctx, const Expectations& at7, const Expectations& at8) {
  Outcome out;
  check_census(out, GraphStream::from_graphs(ctx.universe(7), 7), at7, ctx.jobs);
  check_census(out, GraphStream::from_graphs(ctx.universe(8), 8), at8, ctx.jobs);
  return out;
}

std::filesystem::path nine_vertex_file(Context& ctx) {
  const auto path = ctx.workdir / "connected9.g6";
  if (!std::filesystem::exists(path)) {
    const auto tmp = ctx.workdir / "connected9.g6.partial";
    std::ofstream f(tmp);
    for (const auto& code : connected_graph6_codes(9)) f << code << '\n';
    f.close();
    std::filesystem::rename(tmp, path);
  }
  return path;
}

Outcome criterion_corrected_value(Context& ctx) {
  Outcome out;
  GraphStream s = GraphStream::file(nine_vertex_file(ctx).string(), 9);
  CensusOptions opt;
  opt.jobs = ctx.jobs;
  const CensusReport r = run_census(s, {InvariantSpec::parse("DL:sp")}, opt);
  out.expect_eq("|G_9|", r.universe, std::uint64_t{261080});
  out.expect_eq("n=9 DL:sp", r.results[0].mates, std::uint64_t{20455});
  return out;
}

Outcome criterion_nine_vertex_census(Context& ctx, const Expectations& at8, const Expectations& at9) {
  Outcome out;
  if (!at8.empty()) check_census(out, GraphStream::from_graphs(ctx.universe(8), 8), at8, ctx.jobs);
  check_census(out, GraphStream::file(nine_vertex_file(ctx).string(), 9), at9, ctx.jobs);
  return out;
}

Outcome criterion_closed_forms() {
  Outcome out;
  int complete_ok = 0, complete_total = 0;
  for (int n = 2; n <= 12; ++n)
    for (MatrixKind k : {MatrixKind::D, MatrixKind::DL, MatrixKind::DQ}) {
      ++complete_total;
      complete_ok += snf(build_matrix(Graph::complete(n), k)) == expected_complete_snf(n, k);
    }
  out.expect(complete_ok == complete_total,
             "K_n closed forms " + std::to_string(complete_ok) + "/" + std::to_string(complete_total));
  std::uint64_t trees = 0, bad = 0;
  for (int v = 2; v <= 14; ++v) {
    const SnfResult expected = expected_tree_distance_snf(v - 1);
    for (const auto& t : enumerate_trees(v)) {
      ++trees;
      bad += !(snf(distance_matrix(t)) == expected);
    }
  }
  out.expect(bad == 0, "tree distance SNF on " + std::to_string(trees) + " trees, " + std::to_string(bad) + " mismatches");
  return out;
}

Outcome criterion_trees(Context& ctx) {
  Outcome out;
  const std::map<int, std::uint64_t> counts{{18, 123867}, {19, 317955}, {20, 823065}};
  for (const auto& [n, want] : counts) {
    FreeTreeGenerator gen(n);
    std::vector<int> levels;
    std::uint64_t c = 0;
    while (gen.next(levels)) ++c;
    out.expect_eq("trees(" + std::to_string(n) + ")", c, want);
  }
  const int max_n = ctx.long_run ? 20 : 16;
  for (MatrixKind k : {MatrixKind::DL, MatrixKind::DQ}) {
    const TreeReport r = verify_tree_coinvariance(max_n, k, ctx.jobs);
    std::uint64_t mates = 0;
    for (const auto& l : r.levels) mates += l.mates;
    out.expect_eq(std::string(to_string(k)) + "-coinvariant tree mates n<=" + std::to_string(max_n), mates,
                  std::uint64_t{0});
  }
  if (ctx.long_run) {
    const std::map<int, std::uint64_t> pairs{{18, 2}, {19, 6}, {20, 14}};
    for (const auto& [n, want] : pairs)
      out.expect_eq("D-cospectral tree pairs n=" + std::to_string(n), verify_tree_d_cospectral(n, ctx.jobs).pairs, want);
  } else {
    out.expect(true, "optional long run (coinvariance 17..20, D-cospectral pairs 18..20) not requested");
  }
  return out;
}

Outcome criterion_dq() {
  Outcome out;
  const DqReport r = verify_dq_characterization(8);
  for (const auto& l : r.levels) {
    if (l.informational) continue;
    out.expect(l.passed, "n=" + std::to_string(l.n) + ": " + std::to_string(l.at_most_one_unit.size()) +
                             " graph(s) with <=1 unit factor, " + std::to_string(l.sharing_complete_snf) +
                             " sharing SNF with K_n");
  }
  bool bipartite = true;
  for (int m = 2; m <= 8; ++m) bipartite = bipartite && complete_bipartite_dq_second_factor(m, 1) == 1;
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= 6; ++n) bipartite = bipartite && complete_bipartite_dq_second_factor(m, n) == 1;
  out.expect(bipartite, "second invariant factor of SNF(DQ(K_{m,n})) is 1");
  return out;
}

BigIntMatrix random_matrix(std::mt19937_64& rng, int n, int range) {
  BigIntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<long long>(rng() % (2 * range + 1)) - range;
  return m;
}

BigIntMatrix random_unimodular(std::mt19937_64& rng, int n) {
  BigIntMatrix u = BigIntMatrix::identity(n);
  for (int step = 0; step < 3 * n; ++step) {
    const int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i == j) {
      for (int k = 0; k < n; ++k) u(i, k) = -u(i, k);
    } else if (rng() % 2) {
      for (int k = 0; k < n; ++k) std::swap(u(i, k), u(j, k));
    } else {
      const long long c = static_cast<long long>(rng() % 5) - 2;
      for (int k = 0; k < n; ++k) u(i, k) += c * u(j, k);
    }
  }
  return u;
}

Outcome criterion_properties(Context& ctx) {
  Outcome out;
  std::uint64_t snf_calls = 0, chain_failures = 0;
  auto checked_snf = [&](const BigIntMatrix& m) {
    SnfResult s = snf(m);
    ++snf_calls;
    chain_failures += !s.divisibility_chain();
    return s;
  };

  std::mt19937_64 rng(2024);
  int invariant = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const BigIntMatrix m = random_matrix(rng, n, 6);
    invariant += checked_snf(m) == checked_snf(random_unimodular(rng, n) * m * random_unimodular(rng, n));
  }
  out.expect(invariant == 1000, "unimodular invariance " + std::to_string(invariant) + "/1000");

  std::uint64_t oracle_cases = 0, oracle_bad = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : ctx.universe(n))
      for (MatrixKind k : kAllMatrixKinds) {
        const BigIntMatrix m = build_matrix(g, k);
        const SnfResult s = checked_snf(m);
        BigInt prod = 1;
        for (int j = 1; j <= n; ++j) {
          ++oracle_cases;
          if (j <= s.rank()) prod *= s.factors[j - 1];
          oracle_bad += gcd_of_k_minors(m, j) != (j <= s.rank() ? prod : BigInt(0));
        }
      }
  out.expect(oracle_bad == 0, "k-minor oracle " + std::to_string(oracle_cases - oracle_bad) + "/" +
                                  std::to_string(oracle_cases));

  int poly_ok = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const BigIntMatrix m = random_matrix(rng, n, 9);
    const CharPoly p = char_poly(m);
    poly_ok += p.coeffs[n] == 1 && p.coeffs[n - 1] == -m.trace() && p.coeffs[0] == (n % 2 ? -1 : 1) * determinant(m);
  }
  for (const auto& g : ctx.universe(6))
    for (MatrixKind k : kAllMatrixKinds) checked_snf(build_matrix(g, k));
  out.expect(poly_ok == 500, "char_poly trace/determinant identities " + std::to_string(poly_ok) + "/500");
  out.expect(chain_failures == 0, "divisibility chain on all " + std::to_string(snf_calls) + " SNFs");

  const std::vector<InvariantSpec> specs{InvariantSpec::parse("A:sp"), InvariantSpec::parse("DL:sp,DQ:sp"),
                                         InvariantSpec::parse("L:in")};
  std::vector<Graph> graphs = ctx.universe(7);
  GraphStream base_stream = GraphStream::from_graphs(graphs, 7);
  const std::string base = emit_report(run_census(base_stream, specs), ReportFormat::TSV);
  bool same = true;
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(graphs.begin(), graphs.end(), rng);
    GraphStream s = GraphStream::from_graphs(graphs, 7);
    CensusOptions opt;
    opt.jobs = ctx.jobs;
    opt.batch_size = 97;
    same = same && emit_report(run_census(s, specs, opt), ReportFormat::TSV) == base;
  }
  out.expect(same, "census order invariance under 3 shuffles");
  return out;
}

Outcome criterion_two_pass(Context& ctx) {
  // support check only: two-pass file mode agrees with memory mode; the full
  // 10-vertex run needs an external graph6 file and several hours
  Outcome out;
  const auto path = ctx.workdir / "connected8.g6";
  {
    std::ofstream f(path);
    for (const auto& g : ctx.universe(8)) f << write_graph6(g) << '\n';
  }
  const std::vector<InvariantSpec> specs{InvariantSpec::parse("A:sp"), InvariantSpec::parse("DQ:in"),
                                         InvariantSpec::parse("DL:sp,DQ:sp")};
  GraphStream mem = GraphStream::from_graphs(ctx.universe(8), 8);
  GraphStream file = GraphStream::file(path.string(), 8);
  CensusOptions opt;
  opt.jobs = ctx.jobs;
  const CensusReport a = run_census(mem, specs, opt);
  opt.two_pass = true;
  const CensusReport b = run_census(file, specs, opt);
  bool same = true;
  for (std::size_t i = 0; i < specs.size(); ++i)
    same = same && a.results[i].mates == b.results[i].mates && a.results[i].histogram == b.results[i].histogram;
  out.expect(same, "two-pass file census equals memory census at n=8");
  out.expect(true, "n=10 reproduction not run here (external 11,716,571-record file, multi-hour)");
  return out;
}

std::set<int> parse_only(const std::string& text) {
  std::set<int> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) ids.insert(std::stoi(item));
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  Context ctx;
  std::string only;
  std::string workdir = (std::filesystem::temp_directory_path() / "cospec-acceptance").string();
  ctx.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_flag("--long", ctx.long_run, "include the optional long tree runs");
  app.add_option("--only", only, "comma-separated criterion numbers");
  app.add_option("--jobs", ctx.jobs)->check(CLI::PositiveNumber);
  app.add_option("--workdir", workdir, "scratch directory for generated graph6 files");
  CLI11_PARSE(app, argc, argv);
  if (const char* env = std::getenv("COSPEC_LONG"); env && std::string(env) == "1") ctx.long_run = true;
  ctx.workdir = workdir;
  std::filesystem::create_directories(ctx.workdir);

  const Expectations table1_7{{"A:sp", 63}, {"L:sp", 115}, {"Q:sp", 80}, {"D:sp", 22}};
  const Expectations table1_8{{"A:sp", 1353}, {"L:sp", 1611}, {"Q:sp", 1047}, {"D:sp", 658}};
  const Expectations table2_7{{"A:in", 853}, {"L:in", 526}, {"Q:in", 620}, {"D:in", 835}};
  const Expectations table2_8{{"A:in", 11117}, {"L:in", 8027}, {"Q:in", 7962}, {"D:in", 11080}};
  const Expectations table3_7{{"DL:sp", 43}, {"DL:in", 18}, {"DL:sp,DL:in", 14},
                              {"DQ:sp", 38}, {"DQ:in", 20}, {"DQ:sp,DQ:in", 20}};
  const Expectations table3_8{{"DL:sp", 745}, {"DL:in", 455}, {"DL:sp,DL:in", 435},
                              {"DQ:sp", 453}, {"DQ:in", 259}, {"DQ:sp,DQ:in", 243}};
  const Expectations table4_8{{"DL:sp,DQ:sp", 90}, {"DL:in,DQ:in", 44}, {"D:in,DL:in", 32},
                              {"D:in,DQ:in", 20},  {"D:sp,DL:sp", 0},   {"D:in,DL:in,DQ:in", 0}};
  const Expectations table4_9{{"DL:sp,DQ:sp", 1965}, {"DL:in,DQ:in", 1447}, {"D:in,DL:in", 1770},
                              {"D:in,DQ:in", 432},   {"D:sp,DL:sp", 32},    {"D:in,DL:in,DQ:in", 138}};
  const Expectations table7_9{{"A:sp,DL:in", 32}, {"D:sp,DL:in", 32}, {"A:sp,DQ:in", 2},
                              {"D:sp,DQ:in", 0},  {"A:sp,D:sp,DL:in", 32}};

  const std::vector<Criterion> criteria{
      {1, 60, [&] { return criterion_universe(ctx); }},
      {2, 300, [&] { return criterion_tables(ctx, table1_7, table1_8); }},
      {3, 300, [&] { return criterion_tables(ctx, table2_7, table2_8); }},
      {4, 300, [&] { return criterion_tables(ctx, table3_7, table3_8); }},
      {5, 1800, [&] { return criterion_corrected_value(ctx); }},
      {6, 0, [&] { return criterion_nine_vertex_census(ctx, table4_8, table4_9); }},
      {7, 0, [&] { return criterion_nine_vertex_census(ctx, {}, table7_9); }},
      {8, 120, [] { return criterion_closed_forms(); }},
      {9, 7200, [&] { return criterion_trees(ctx); }},
      {10, 0, [] { return criterion_dq(); }},
      {11, 0, [&] { return criterion_properties(ctx); }},
      {12, 0, [&] { return criterion_two_pass(ctx); }},
  };

  const std::set<int> selected = parse_only(only);
  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.passed = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds)
      out.expect(false, "time budget " + std::to_string(static_cast<int>(c.budget_seconds)) + "s exceeded");
    all = all && out.passed;
    std::printf("criterion %2d  %s  %8.1fs  %s\n", c.id, out.passed ? "PASS" : "FAIL", seconds, out.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
