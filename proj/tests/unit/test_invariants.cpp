#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "reslab/invariants.hpp"
#include "reslab/asymptotics.hpp"
#include "reslab/lp.hpp"
#include "../oracles.hpp"

using namespace reslab;

TEST(CoveringLp, SmallInstances) {
  // Triangle: every pair of three variables covered once.
  const std::vector<std::vector<std::size_t>> rows{{1, 2}, {0, 2}, {0, 1}};
  const std::vector<Fraction> demand(3, Fraction(1));
  const auto sol = solve_covering_lp(rows, 3, demand);
  EXPECT_EQ(sol.value, Fraction(3, 2));
  EXPECT_TRUE(verify_covering_lp(rows, 3, demand, sol));
  const std::vector<std::vector<std::size_t>> infeasible{{}};
  EXPECT_THROW(solve_covering_lp(infeasible, 2, {Fraction(1)}), ValidationError);
}

TEST(CoveringLpProperty, DualCertificateOnRandomInstances) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 6, s = 1 + rng() % 5;
    std::vector<std::vector<std::size_t>> rows(s);
    std::vector<Fraction> demand;
    for (auto& row : rows) {
      row = oracle::random_prime(rng, n);
      demand.emplace_back(static_cast<std::int64_t>(1 + rng() % 4));
    }
    const auto sol = solve_covering_lp(rows, n, demand);
    EXPECT_TRUE(verify_covering_lp(rows, n, demand, sol));
  }
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha_symbolic(build_pair_lines(2, 3), 5), 10u);
  EXPECT_EQ(alpha_symbolic(build_pair_lines(3, 5), 2), 3u);
  EXPECT_TRUE(membership(build_pair_lines(3, 5), 2, {1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(alpha_symbolic(build_pair_lines(3, 5), 4), 6u);
  EXPECT_THROW(alpha_symbolic(build_pair_lines(3, 5), 0), ValidationError);
}

TEST(Alpha, PairLinesTable) {
  const CoveringIlp ilp(build_pair_lines(3, 5));
  const std::vector<std::uint64_t> expected{2, 3, 5, 6};
  for (std::uint64_t m = 1; m <= 4; ++m) EXPECT_EQ(ilp.solve(m), expected[m - 1]) << "m=" << m;
}

TEST(Alpha, CoordinatePointsClosedForm) {
  for (std::int64_t n = 2; n <= 5; ++n) {
    const CoveringIlp ilp(coordinate_points(n));
    for (std::int64_t m = 1; m <= 6; ++m) {
      EXPECT_EQ(ilp.solve(m), static_cast<std::uint64_t>((n * m + n - 2) / (n - 1))) << n << "," << m;
    }
  }
}

TEST(AlphaProperty, IlpMatchesBruteForce) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    std::set<Prime> primes;
    const std::size_t k = 1 + rng() % 4;
    for (int tries = 0; primes.size() < k && tries < 50; ++tries) primes.insert(oracle::random_prime(rng, n));
    const Arrangement a(n, std::vector<Prime>(primes.begin(), primes.end()));
    const CoveringIlp ilp(a);
    for (std::uint64_t m = 1; m <= 4; ++m) {
      EXPECT_EQ(ilp.solve(m), oracle::alpha_symbolic(n, a.primes(), m)) << a.canonical_form() << " m=" << m;
    }
  }
}

TEST(Gamma, Exact) {
  for (std::int64_t s = 2; s <= 6; ++s) {
    const auto g = gamma_exact(build_pair_lines(s, 2 * s - 1));
    EXPECT_EQ(g.value, Fraction(s, s - 1));
    EXPECT_TRUE(verify_gamma_certificate(build_pair_lines(s, 2 * s - 1), g));
  }
  EXPECT_EQ(gamma_exact(Arrangement(4, {{2, 3}})).value, Fraction(1));
  EXPECT_EQ(gamma_exact(coordinate_points(3)).value, Fraction(3, 2));
  const auto g = gamma_exact(coordinate_points(3));
  EXPECT_EQ(g.vertex, (std::vector<Fraction>{Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)}));
  EXPECT_EQ(g.q, 2);
  EXPECT_EQ(g.alpha_at_q, 3u);
}

TEST(Gamma, TamperedCertificateIsRejected) {
  const auto a = coordinate_points(3);
  auto g = gamma_exact(a);
  g.value = Fraction(4, 3);
  EXPECT_FALSE(verify_gamma_certificate(a, g));
  g = gamma_exact(a);
  g.vertex[0] = Fraction(1, 3);
  EXPECT_FALSE(verify_gamma_certificate(a, g));
}

TEST(Gamma, Window) {
  const auto w = gamma_window(build_pair_lines(3, 5), 4);
  EXPECT_EQ(w.lo, Fraction(6, 7));
  EXPECT_EQ(w.hi, Fraction(3, 2));
  // alpha(I^(3)) = 6 and h = 2 give the lower end 6/4.
  const auto w2 = gamma_window(build_pair_lines(2, 3), 3);
  EXPECT_EQ(w2.lo, Fraction(3, 2));
  EXPECT_EQ(w2.hi, Fraction(2));
  EXPECT_TRUE(w2.contains(gamma_exact(build_pair_lines(2, 3)).value));
  const auto a = coordinate_points(4);
  const auto w1 = gamma_window(a, 1);
  const auto i = radical_ideal(a);
  EXPECT_EQ(w1.lo, Fraction(static_cast<std::int64_t>(alpha(i)), 3));
  EXPECT_EQ(w1.hi, Fraction(static_cast<std::int64_t>(alpha(i))));
}

TEST(Containment, Examples) {
  const auto pairs = build_pair_lines(2, 3);
  EXPECT_TRUE(containment_check(pairs, 2, 2).contained());

  const auto pts = coordinate_points(3);
  const auto f = containment_check(pts, 2, 2);
  EXPECT_EQ(f.status, ContainmentStatus::not_contained);
  EXPECT_EQ(f.method, ContainmentMethod::alpha_refutation);
  const auto g = containment_check(pts, 3, 2);
  EXPECT_TRUE(g.contained());
  EXPECT_EQ(g.method, ContainmentMethod::generator_check);
  const auto h = containment_check(pts, 1, 2);
  EXPECT_EQ(h.method, ContainmentMethod::m_less_r_rule);
  EXPECT_FALSE(h.contained());
}

TEST(Containment, ShortcutsAgreeWithGeneratorCheck) {
  for (const auto& a : {build_pair_lines(3, 5), coordinate_points(3), coordinate_points(4)}) {
    ContainmentEngine engine(a);
    for (std::uint64_t m = 1; m <= 5; ++m) {
      for (std::uint64_t r = 1; r <= 5; ++r) {
        const bool direct = is_subideal(engine.symbolic(m), engine.ordinary(r));
        EXPECT_EQ(engine.check(m, r).contained(), direct) << a.canonical_form() << " " << m << "," << r;
      }
    }
  }
}

TEST(Resurgence, Window) {
  const auto w = resurgence_window(build_pair_lines(3, 5));
  EXPECT_EQ(w.lo, Fraction(4, 3));
  EXPECT_EQ(w.hi, Fraction(4, 3));
  const auto w2 = resurgence_window(build_pair_lines(2, 3));
  EXPECT_EQ(w2.lo, Fraction(1));
  EXPECT_EQ(w2.hi, Fraction(1));
  const auto w3 = resurgence_window(Arrangement(4, {{2, 3}}));
  EXPECT_EQ(w3.lo, Fraction(1));
  EXPECT_EQ(w3.hi, Fraction(1));
  const auto w4 = resurgence_window(Arrangement(4, {{0, 1}, {1, 2}}));
  EXPECT_EQ(w4.hi_provenance, "height");
  EXPECT_LE(w4.lo, w4.hi);
}

TEST(Evidence, Examples) {
  const auto e = noetherian_evidence(build_pair_lines(2, 3), 1, 1, 5);
  EXPECT_TRUE(e.all_equalities_hold());
  ASSERT_TRUE(e.bound.has_value());
  EXPECT_EQ(*e.bound, Fraction(1));

  const auto f = noetherian_evidence(coordinate_points(3), 2, 1, 4);
  EXPECT_TRUE(f.all_equalities_hold());
  ASSERT_TRUE(f.bound.has_value());
  EXPECT_EQ(*f.bound, Fraction(2));
  EXPECT_EQ(f.status, "verified up to M=4");

  const auto g = noetherian_evidence(coordinate_points(3), 2, 2, 1);
  EXPECT_FALSE(g.bound.has_value());
  EXPECT_EQ(g.containment.method, ContainmentMethod::alpha_refutation);
  EXPECT_EQ(g.status, "containment fails");
}

TEST(InvariantRecord, Fields) {
  const auto rec = invariant_record(build_pair_lines(3, 5), 4);
  EXPECT_EQ(rec.alpha_I, 2u);
  EXPECT_EQ(rec.omega_I, 2u);
  EXPECT_EQ(rec.h, 4u);
  EXPECT_EQ(rec.alpha_symbolic_table.at(3), 5u);
  EXPECT_EQ(rec.gamma.value, Fraction(3, 2));
}

TEST(Gamma, CoordinateLinesStayBelowCubicRoot) {
  // The six coordinate lines of P^3 are the 2-subsets of {0,1,2,3}; every
  // nonempty subfamily of s lines has gamma <= g(s).
  std::vector<Prime> lines;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) lines.push_back({a, b});
  }
  for (unsigned mask = 1; mask < (1u << lines.size()); ++mask) {
    std::vector<Prime> chosen;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (mask & (1u << k)) chosen.push_back(lines[k]);
    }
    const Arrangement a(4, chosen);
    const auto g = largest_root_g(static_cast<std::int64_t>(chosen.size()));
    EXPECT_LE(gamma_exact(a).value, g.g_hi) << a.canonical_form();
  }
}
