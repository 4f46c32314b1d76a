#include <gtest/gtest.h>

#include <random>

#include "reslab/asymptotics.hpp"
#include "../oracles.hpp"

using namespace reslab;

TEST(Hilbert, PointPower) {
  EXPECT_EQ(point_power_hilbert(2, 1, 1), 2);
  EXPECT_EQ(point_power_hilbert(3, 1, 1), 3);
  EXPECT_EQ(point_power_hilbert(2, 2, 2), 3);
  EXPECT_EQ(point_power_hilbert(2, 3, 1), 0);
  EXPECT_THROW(point_power_hilbert(0, 1, 1), ValidationError);
}

TEST(Hilbert, PointPowerMatchesMonomialCount) {
  for (std::int64_t N = 1; N <= 4; ++N) {
    std::vector<std::size_t> vars;
    for (std::int64_t j = 1; j <= N; ++j) vars.push_back(j);
    for (std::int64_t m = 1; m <= 6; ++m) {
      for (std::int64_t t = 0; t <= 6; ++t) {
        EXPECT_EQ(point_power_hilbert(N, m, t), oracle::count_power_members(N + 1, vars, m, t)) << N << m << t;
      }
    }
  }
}

TEST(Hilbert, LinePower) {
  EXPECT_EQ(line_power_hilbert_p3(1, 1), 2);
  EXPECT_EQ(line_power_hilbert_p3(2, 2), 3);
  EXPECT_EQ(line_power_hilbert_p3(2, 3), 10);
  for (std::int64_t m = 1; m <= 6; ++m) {
    for (std::int64_t t = 0; t <= 6; ++t) {
      EXPECT_EQ(line_power_hilbert_p3(m, t), oracle::count_power_members(4, {2, 3}, m, t)) << m << "," << t;
    }
  }
}

TEST(Hilbert, GenericLines) {
  EXPECT_EQ(generic_lines_hilbert(3, 3, 2), 1);
  EXPECT_EQ(generic_lines_hilbert(3, 4, 2), 0);
  EXPECT_EQ(generic_lines_hilbert(3, 4, 3), 4);
  EXPECT_EQ(generic_lines_alpha(3, 4), 3);
  EXPECT_EQ(generic_lines_hilbert(4, 2, 1), 1);
  EXPECT_THROW(generic_lines_hilbert(2, 1, 1), ValidationError);
}

TEST(Hilbert, ExpectedDimension) {
  EXPECT_EQ(expected_symbolic_dim(3, 1, 2), 1);
  EXPECT_EQ(expected_symbolic_dim(3, 2, 4), 0);
  EXPECT_EQ(expected_dim_expression(3, 2, 4, 1), Fraction(-4));
  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t t = m; t <= 8; ++t) EXPECT_EQ(expected_symbolic_dim(1, m, t), line_power_hilbert_p3(m, t));
  }
}

TEST(Family, Records) {
  const auto f = cor13_family(3, 1);
  EXPECT_EQ(f.s, 2);
  EXPECT_EQ(f.alpha, 2);
  EXPECT_EQ(f.rho_a_formula, "2/gamma");
  const auto g = cor13_family(3, 4);
  EXPECT_EQ(g.s, 7);
  EXPECT_EQ(g.alpha, 5);
  EXPECT_EQ(g.reg, 5);
  EXPECT_THROW(cor13_family(3, 2), ValidationError);
}

TEST(CubicRoot, Brackets) {
  const auto one = largest_root_g(1);
  EXPECT_EQ(one.g_lo, Fraction(1));
  EXPECT_EQ(one.g_hi, Fraction(1));

  const auto three = largest_root_g(3, Fraction(1, 10000));
  EXPECT_LE(three.g_hi - three.g_lo, Fraction(1, 10000));
  EXPECT_LT(three.g_lo.to_double(), 2.5842254);
  EXPECT_GT(three.g_hi.to_double(), 2.5842255);
  EXPECT_LT(cubic_g(3, three.g_lo), Fraction(0));
  EXPECT_GT(cubic_g(3, three.g_hi), Fraction(0));
  EXPECT_LT(cubic_g(3, Fraction(5, 2)), Fraction(0));
  EXPECT_GT(cubic_g(3, Fraction(13, 5)), Fraction(0));

  const auto s17 = largest_root_g(17);
  EXPECT_LT(s17.g_hi * s17.g_hi, Fraction(51));
  EXPECT_GT((s17.g_lo + Fraction(3, 4)) * (s17.g_lo + Fraction(3, 4)), Fraction(51));
  EXPECT_THROW(largest_root_g(0), ValidationError);
}

TEST(ProofCubic, IdentityAndSigns) {
  // 6·(expected-dimension expression) at t = m·tau equals the cubic in i.
  EXPECT_EQ(lemma41_poly(3, 2, Fraction(5, 2), 1), Fraction(6) * expected_dim_expression(3, 2, 5, 1));
  EXPECT_EQ(lemma41_poly(3, 2, Fraction(5, 2), 1), Fraction(48));

  const auto g = largest_root_g(20);
  EXPECT_LT(lemma41_poly(20, 3, Fraction(1), 1), Fraction(0));
  EXPECT_LT(lemma41_poly(20, 1, g.g_lo - Fraction(1, 100), 1), Fraction(0));

  const Fraction tau = largest_root_g(5).g_hi + Fraction(1, 10);
  const auto i0 = lemma41_positivity_threshold(5, 1, tau);
  for (std::int64_t i = i0; i < i0 + 200; ++i) EXPECT_GT(lemma41_poly(5, 1, tau, i), Fraction(0));
  if (i0 > 1) {
    EXPECT_LE(lemma41_poly(5, 1, tau, i0 - 1), Fraction(0));
  }
  EXPECT_THROW(lemma41_positivity_threshold(5, 1, Fraction(1)), ValidationError);
}

TEST(Explore, Table) {
  EXPECT_EQ(conjecture_explore(17, 1).rows.at(0).alpha_hat, 8);
  // Three general lines lie on a unique quadric.
  EXPECT_EQ(conjecture_explore(3, 1).rows.at(0).alpha_hat, 2);
  EXPECT_EQ(conjecture_explore(3, 1).rows.at(0).alpha_hat, generic_lines_alpha(3, 3));
  const auto one = conjecture_explore(1, 6);
  for (const auto& row : one.rows) EXPECT_EQ(row.alpha_hat, row.m);
  EXPECT_THROW(conjecture_explore(3, 0), ValidationError);
}

TEST(Family, BinomialIdentityAtNextDegree) {
  // When s(t+1) = C(t+N,N), one degree higher leaves exactly s(N-1) forms.
  int hits = 0;
  for (std::int64_t N = 3; N <= 8; ++N) {
    for (std::int64_t t = 0; t <= 50; ++t) {
      const BigInt total = binomial(t + N, N);
      if (total % (t + 1) != 0) continue;
      const BigInt s = total / (t + 1);
      EXPECT_EQ(binomial(t + 1 + N, N) - s * (t + 2), s * (N - 1)) << N << "," << t;
      ++hits;
    }
  }
  EXPECT_GT(hits, 10);
}
