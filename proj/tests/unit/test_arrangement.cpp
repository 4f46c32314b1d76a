#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "reslab/arrangement.hpp"
#include "../oracles.hpp"

using namespace reslab;

namespace {

std::set<oracle::Vec> as_set(const MonomialIdeal& i) {
  std::set<oracle::Vec> out;
  for (const auto& g : i.generators()) out.insert(oracle::Vec(g.exponents().begin(), g.exponents().end()));
  return out;
}

}  // namespace

TEST(Arrangement, PairLines) {
  const auto a = build_pair_lines(2, 3);
  EXPECT_EQ(a.num_components(), 2u);
  EXPECT_EQ(a.prime(0), (Prime{2, 3}));
  EXPECT_EQ(a.prime(1), (Prime{0, 1}));
  EXPECT_EQ(a.free_support(0), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(a.free_support(1), (std::vector<std::size_t>{2, 3}));
  const auto b = build_pair_lines(3, 5);
  EXPECT_EQ(b.free_support(2), (std::vector<std::size_t>{4, 5}));
  EXPECT_THROW(build_pair_lines(3, 4), ValidationError);
  EXPECT_THROW(build_pair_lines(0, 4), ValidationError);
}

TEST(Arrangement, CoordinatePoints) {
  const auto a = coordinate_points(3);
  EXPECT_EQ(a.prime(0), (Prime{1, 2}));
  EXPECT_EQ(a.prime(1), (Prime{0, 2}));
  EXPECT_EQ(a.prime(2), (Prime{0, 1}));
  EXPECT_EQ(to_string(radical_ideal(a)), "x0*x1, x0*x2, x1*x2");
  EXPECT_EQ(to_string(radical_ideal(coordinate_points(2))), "x0*x1");
  EXPECT_EQ(properties(coordinate_points(4)).h, 3u);
  EXPECT_THROW(coordinate_points(1), ValidationError);
}

TEST(Arrangement, ValidationRejectsBadInput) {
  EXPECT_THROW(Arrangement(3, {{0, 1, 2}}), ValidationError);  // the whole ring
  EXPECT_THROW(Arrangement(3, {{}}), ValidationError);
  EXPECT_THROW(Arrangement(3, {{0, 5}}), ValidationError);
  EXPECT_THROW(Arrangement(3, {{0, 1}, {0, 1}}), ValidationError);
  EXPECT_THROW(Arrangement(3, {}), ValidationError);
  EXPECT_THROW(Arrangement(3, {{0}, {1}}, {"only-one"}), ValidationError);
}

TEST(Arrangement, CanonicalFormIgnoresOrderAndLabels) {
  const Arrangement a(4, {{0, 1}, {2, 3}}, {"A", "B"});
  const Arrangement b(4, {{2, 3}, {0, 1}}, {"P", "Q"});
  EXPECT_EQ(a.canonical_form(), b.canonical_form());
  EXPECT_NE(a.canonical_form(), Arrangement(5, {{0, 1}, {2, 3}}).canonical_form());
}

TEST(Arrangement, Membership) {
  const auto a = build_pair_lines(3, 5);
  EXPECT_TRUE(membership(a, 2, {1, 0, 1, 0, 1, 0}));
  EXPECT_FALSE(membership(a, 2, {2, 1, 0, 0, 0, 0}));
  EXPECT_TRUE(membership(a, 0, Monomial::one(6)));
  EXPECT_TRUE(membership(coordinate_points(3), -1, Monomial::one(3)));
}

TEST(Arrangement, SymbolicPowerExamples) {
  const auto pairs = build_pair_lines(2, 3);
  EXPECT_EQ(to_string(symbolic_power(pairs, 1)), "x0*x2, x0*x3, x1*x2, x1*x3");
  EXPECT_EQ(symbolic_power(pairs, 2), power(symbolic_power(pairs, 1), 2));
  EXPECT_TRUE(symbolic_power(pairs, 0).is_unit());

  const auto pts = coordinate_points(3);
  const std::set<oracle::Vec> expected{{1, 1, 1}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}};
  EXPECT_EQ(as_set(symbolic_power(pts, 2)), expected);
}

TEST(Arrangement, Properties) {
  const auto p = properties(build_pair_lines(3, 5));
  EXPECT_EQ(p.h, 4u);
  EXPECT_TRUE(p.pairwise_disjoint);
  EXPECT_EQ(properties(coordinate_points(3)).h, 2u);
  EXPECT_TRUE(properties(coordinate_points(3)).pairwise_disjoint);
  EXPECT_FALSE(properties(Arrangement(4, {{0, 1}, {1, 2}})).pairwise_disjoint);
}

TEST(Arrangement, EmbedAddsVariablesToEveryPrime) {
  const auto a = build_pair_lines(2, 3);
  const auto e = embed(a, 2);
  EXPECT_EQ(e.num_vars(), 6u);
  EXPECT_EQ(e.prime(0), (Prime{2, 3, 4, 5}));
  EXPECT_EQ(embed(a, 0), a);
  EXPECT_TRUE(contains_monomial(symbolic_power(e, 1), Monomial::variable(6, 4)));
}

TEST(Arrangement, PhiFlattening) {
  const auto phi2 = flatten_phi(build_pair_lines(2, 3));
  EXPECT_EQ(phi2.apply({1, 2, 0, 3}), Monomial({3, 3}));
  const auto phi3 = flatten_phi(build_pair_lines(3, 5));
  const Monomial image = phi3.apply({1, 0, 1, 0, 1, 0});
  EXPECT_EQ(image, Monomial({1, 1, 1}));
  EXPECT_TRUE(membership(phi3.target(), 2, image));
  EXPECT_TRUE(phi3.apply(Monomial::one(6)).is_one());
  EXPECT_EQ(phi3.target(), coordinate_points(3));
  EXPECT_THROW(flatten_phi(build_pair_lines(2, 4)), ValidationError);
}

TEST(ArrangementProperty, PhiPreservesMembership) {
  std::mt19937_64 rng(11);
  for (std::int64_t s = 2; s <= 4; ++s) {
    const auto a = build_pair_lines(s, 2 * s - 1);
    const auto phi = flatten_phi(a);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Exponent> e(2 * s);
      for (auto& v : e) v = rng() % 4;
      const Monomial mu(e);
      const std::int64_t m = 1 + rng() % 5;
      EXPECT_EQ(membership(a, m, mu), membership(phi.target(), m, phi.apply(mu)));
    }
  }
}

TEST(Arrangement, TypeCollapse) {
  const auto a = embed(build_pair_lines(2, 3), 2);
  const auto tc = collapse_types(a);
  EXPECT_EQ(tc.collapsed.num_vars(), 3u);
  EXPECT_EQ(tc.members[2], (std::vector<std::size_t>{4, 5}));
  EXPECT_EQ(tc.compress({1, 2, 0, 3, 1, 1}), Monomial({3, 3, 2}));
  const auto expanded = expand_type_vector(tc, {1, 0, 2}, a.num_vars());
  EXPECT_EQ(expanded.size(), 2u * 3u);
}

TEST(ArrangementProperty, SymbolicPowerMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const std::size_t k = 1 + rng() % 3;
    std::set<Prime> primes;
    for (int tries = 0; primes.size() < k && tries < 50; ++tries) primes.insert(oracle::random_prime(rng, n));
    const Arrangement a(n, std::vector<Prime>(primes.begin(), primes.end()));
    const std::uint64_t m = 1 + rng() % 3;
    const auto expected = oracle::symbolic_generators(n, a.primes(), m);
    EXPECT_EQ(as_set(symbolic_power(a, m)), expected);
    EXPECT_EQ(as_set(enumerate_symbolic_generators(a, m)), expected);
  }
}

TEST(ArrangementProperty, SymbolicPowerLaws) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + rng() % 3;
    std::set<Prime> primes;
    while (primes.size() < 2) primes.insert(oracle::random_prime(rng, n));
    const Arrangement a(n, std::vector<Prime>(primes.begin(), primes.end()));
    const auto i1 = symbolic_power(a, 1), i2 = symbolic_power(a, 2), i3 = symbolic_power(a, 3);
    EXPECT_TRUE(is_subideal(i2, i1));
    EXPECT_TRUE(is_subideal(i3, i2));
    EXPECT_TRUE(is_subideal(product(i1, i2), i3));
    EXPECT_TRUE(is_subideal(power(i1, 3), i3));
    EXPECT_LE(alpha(i3), alpha(i1) + alpha(i2));
  }
}
