#include <random>

#include <gtest/gtest.h>

#include "cospec/charpoly.hpp"
#include "cospec/enumerate.hpp"
#include "cospec/matrices.hpp"
#include "cospec/minors.hpp"
#include "cospec/snf.hpp"

using namespace cospec;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

SnfResult make_snf(std::initializer_list<long long> factors, int zeros) { return {ints(factors), zeros}; }

BigIntMatrix random_matrix(std::mt19937_64& rng, int n, int range) {
  BigIntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<long long>(rng() % (2 * range + 1)) - range;
  return m;
}

// product of random elementary matrices: determinant +-1
BigIntMatrix random_unimodular(std::mt19937_64& rng, int n) {
  BigIntMatrix u = BigIntMatrix::identity(n);
  for (int step = 0; step < 3 * n; ++step) {
    const int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    switch (rng() % 3) {
      case 0:
        if (i != j) {
          const long long c = static_cast<long long>(rng() % 5) - 2;
          for (int k = 0; k < n; ++k) u(i, k) += c * u(j, k);
        }
        break;
      case 1:
        for (int k = 0; k < n; ++k) std::swap(u(i, k), u(j, k));
        break;
      default:
        for (int k = 0; k < n; ++k) u(i, k) = -u(i, k);
    }
  }
  return u;
}

void expect_oracle_agreement(const BigIntMatrix& m) {
  const SnfResult s = snf(m);
  ASSERT_TRUE(s.divisibility_chain());
  ASSERT_EQ(s.dimension(), m.size());
  BigInt prod = 1;
  for (int k = 1; k <= m.size(); ++k) {
    if (k <= s.rank()) {
      prod *= s.factors[k - 1];
      EXPECT_EQ(gcd_of_k_minors(m, k), prod) << "k=" << k << "\n" << m;
    } else {
      EXPECT_EQ(gcd_of_k_minors(m, k), 0) << "k=" << k << "\n" << m;
    }
  }
}

}  // namespace

TEST(CharPoly, TriangleAdjacency) {
  EXPECT_EQ(char_poly(build_matrix(Graph::complete(3), MatrixKind::A)).coeffs, ints({-2, -3, 0, 1}));
}

TEST(CharPoly, ZeroMatrix) { EXPECT_EQ(char_poly(BigIntMatrix(4)).coeffs, ints({0, 0, 0, 0, 1})); }

TEST(CharPoly, PathDistance) {
  const CharPoly p = char_poly(distance_matrix(Graph::path(3)));
  EXPECT_EQ(p.coeffs, ints({-4, -6, 0, 1}));
  EXPECT_EQ(p.degree(), 3);
}

TEST(CharPoly, EmptyMatrix) { EXPECT_EQ(char_poly(BigIntMatrix(0)).coeffs, ints({1})); }

TEST(CharPoly, TraceAndDeterminantIdentities) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const BigIntMatrix m = random_matrix(rng, n, 9);
    const CharPoly p = char_poly(m);
    ASSERT_EQ(p.degree(), n);
    EXPECT_EQ(p.coeffs[n], 1);
    EXPECT_EQ(p.coeffs[n - 1], -m.trace());
    EXPECT_EQ(p.coeffs[0], (n % 2 ? -1 : 1) * determinant(m));
  }
}

TEST(CharPoly, CayleyHamilton) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const BigIntMatrix m = random_matrix(rng, n, 5);
    const CharPoly p = char_poly(m);
    BigIntMatrix acc(n), power = BigIntMatrix::identity(n);
    for (int k = 0; k <= n; ++k) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc(i, j) += p.coeffs[k] * power(i, j);
      power = power * m;
    }
    EXPECT_EQ(acc, BigIntMatrix(n));
  }
}

TEST(CharPoly, OverflowFallsBackToExactArithmetic) {
  BigIntMatrix m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = BigInt(4000000000LL) * (i + 2 * j + 1);
  EXPECT_EQ(char_poly(m).coeffs, detail::char_poly_as<BigInt>(m).coeffs);
  m(0, 0) = BigInt("123456789012345678901234567890");
  EXPECT_EQ(char_poly(m).coeffs, detail::char_poly_as<BigInt>(m).coeffs);
}

TEST(Snf, SpecExamples) {
  EXPECT_EQ(snf(distance_matrix(Graph::path(3))), make_snf({1, 1, 4}, 0));
  EXPECT_EQ(snf(build_matrix(Graph::complete(4), MatrixKind::DL)), make_snf({1, 4, 4}, 1));
  EXPECT_EQ(snf(build_matrix(Graph::complete(4), MatrixKind::DQ)), make_snf({1, 2, 2, 12}, 0));
  EXPECT_EQ(snf(distance_matrix(Graph::complete(5))), make_snf({1, 1, 1, 1, 4}, 0));
  EXPECT_EQ(snf(build_matrix(Graph::complete(3), MatrixKind::DQ)), make_snf({1, 1, 4}, 0));
}

TEST(Snf, ZeroAndIdentity) {
  EXPECT_EQ(snf(BigIntMatrix(3)), make_snf({}, 3));
  EXPECT_EQ(snf(BigIntMatrix::identity(4)), make_snf({1, 1, 1, 1}, 0));
  EXPECT_EQ(snf(BigIntMatrix{{2, 0}, {0, 3}}), make_snf({1, 6}, 0));
  EXPECT_EQ(snf(BigIntMatrix{{-6, 0}, {0, 4}}), make_snf({2, 12}, 0));
}

TEST(Snf, UnimodularInvariance) {
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    BigIntMatrix m = random_matrix(rng, n, 6);
    if (trial % 4 == 0) m(0, 0) = 0, m = m * m;  // some rank-deficient or structured cases
    const SnfResult base = snf(m);
    ASSERT_TRUE(base.divisibility_chain());
    const BigIntMatrix transformed = random_unimodular(rng, n) * m * random_unimodular(rng, n);
    const SnfResult after = snf(transformed);
    EXPECT_TRUE(after.divisibility_chain());
    EXPECT_EQ(after, base) << m << "\n" << transformed;
  }
}

TEST(Snf, RandomMatricesAgreeWithMinorsOracle) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    BigIntMatrix m = random_matrix(rng, n, 8);
    if (trial % 5 == 0 && n > 1)
      for (int j = 0; j < n; ++j) m(n - 1, j) = 2 * m(0, j);
    expect_oracle_agreement(m);
  }
}

TEST(Snf, MinorsOracleOnConnectedGraphs) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : enumerate_connected(n))
      for (MatrixKind k : kAllMatrixKinds) expect_oracle_agreement(build_matrix(g, k));
}

TEST(Snf, DeterminantMatchesFactorProduct) {
  for (const auto& g : enumerate_connected(6))
    for (MatrixKind k : kAllMatrixKinds) {
      const BigIntMatrix m = build_matrix(g, k);
      const SnfResult s = snf(m);
      BigInt prod = 1;
      for (const auto& f : s.factors) prod *= f;
      EXPECT_EQ(s.zeros == 0 ? prod : BigInt(0), abs_value(determinant(m)));
    }
}

TEST(Snf, TieredArithmeticAgrees) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    BigIntMatrix m = random_matrix(rng, n, 1000);
    m(0, 0) *= BigInt(1000000000000LL);
    EXPECT_EQ(snf(m), detail::snf_as<BigInt>(m));
  }
}

TEST(Minors, PathDistance) {
  const BigIntMatrix d = distance_matrix(Graph::path(3));
  EXPECT_EQ(gcd_of_k_minors(d, 1), 1);
  EXPECT_EQ(gcd_of_k_minors(d, 3), 4);
  EXPECT_EQ(gcd_of_k_minors(d, 3) / gcd_of_k_minors(d, 2), 4);
  EXPECT_THROW(gcd_of_k_minors(d, 0), std::out_of_range);
  EXPECT_THROW(gcd_of_k_minors(d, 4), std::out_of_range);
}

TEST(PRank, Examples) {
  EXPECT_EQ(p_rank(build_matrix(Graph::complete(3), MatrixKind::A), 2), 2);
  EXPECT_EQ(p_rank(distance_matrix(Graph::path(3)), 2), 2);
  for (long long p : {2, 3, 5, 7, 101}) EXPECT_EQ(p_rank(BigIntMatrix::identity(5), p), 5);
  EXPECT_THROW(p_rank(BigIntMatrix::identity(2), 4), std::invalid_argument);
  EXPECT_THROW(p_rank(BigIntMatrix::identity(2), 1), std::invalid_argument);
}

TEST(PRank, MatchesUnitValuationCount) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_connected(n))
      for (MatrixKind k : kAllMatrixKinds)
        for (long long p : {2, 3, 5}) {
          const BigIntMatrix m = build_matrix(g, k);
          const auto v = p_part_divisors(m, p);
          EXPECT_EQ(p_rank(m, p), std::count(v.begin(), v.end(), 0));
        }
}

TEST(PPart, Examples) {
  EXPECT_EQ(p_part_divisors(build_matrix(Graph::complete(4), MatrixKind::DQ), 2), (std::vector<int>{0, 1, 1, 2}));
  EXPECT_EQ(p_part_divisors(BigIntMatrix::identity(4), 7), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(p_part_divisors(distance_matrix(Graph::path(3)), 3), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(p_part_divisors(build_matrix(Graph::complete(4), MatrixKind::DL), 2),
            (std::vector<int>{0, 2, 2, kInfiniteValuation}));
  EXPECT_THROW(p_part_divisors(BigIntMatrix::identity(2), 6), std::invalid_argument);
}
