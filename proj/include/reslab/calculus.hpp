#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reslab/errors.hpp"
#include "reslab/fraction.hpp"

namespace reslab {

/// A verified or assumed containment I^(c) ⊆ I^b.
struct Fact {
  std::uint64_t c = 1;
  std::uint64_t b = 1;
  friend auto operator<=>(const Fact&, const Fact&) = default;
};

/// Set of containment facts for one ideal. (1,1) is always present. Facts
/// with b > c are rejected: they would contradict I^(m) ⊄ I^r for m < r.
///
/// `factorization_assumed` records whether the symbolic powers are taken to
/// factor as I^(c_1 + ... + c_k) = I^(c_1) ··· I^(c_k) over the listed facts;
/// derivations that combine facts are only valid under that assumption.
class FactLedger {
 public:
  FactLedger() { facts_.insert(Fact{1, 1}); }
  FactLedger(std::vector<Fact> facts, bool factorization_assumed) : FactLedger() {
    for (const auto& f : facts) add(f);
    factorization_assumed_ = factorization_assumed;
  }

  void add(Fact f) {
    if (f.c == 0 || f.b == 0) throw ValidationError("ledger facts need c, b >= 1");
    if (f.b > f.c) {
      throw ValidationError("fact (" + std::to_string(f.c) + "," + std::to_string(f.b) +
                            ") has b > c, which cannot hold since I^(m) is never inside I^r for m < r");
    }
    facts_.insert(f);
  }

  const std::set<Fact>& facts() const noexcept { return facts_; }
  bool factorization_assumed() const noexcept { return factorization_assumed_; }
  void set_factorization_assumed(bool v) noexcept { factorization_assumed_ = v; }

  /// Facts usable as knapsack items: everything except the identity (1,1),
  /// whose repetition would assert I^(m) = I^m.
  std::vector<Fact> nontrivial() const {
    std::vector<Fact> out;
    for (const auto& f : facts_) {
      if (!(f.c == 1 && f.b == 1)) out.push_back(f);
    }
    return out;
  }

 private:
  std::set<Fact> facts_;
  bool factorization_assumed_ = false;
};

/// r <= m·b/c - b, which forces I^(m) ⊆ I^r once I^(cm) = (I^(c))^m for all m
/// and I^(c) ⊆ I^b.
inline bool criterion_mbcb(std::uint64_t c, std::uint64_t b, std::uint64_t m, std::uint64_t r) {
  if (c == 0 || b == 0 || m == 0 || r == 0) throw ValidationError("criterion needs all arguments >= 1");
  const auto C = static_cast<std::int64_t>(c), B = static_cast<std::int64_t>(b);
  const auto M = static_cast<std::int64_t>(m), R = static_cast<std::int64_t>(r);
  return Fraction(R) <= Fraction(M * B, C) - Fraction(B);
}

/// Best conditional upper bound on the asymptotic resurgence: min c/b over
/// the recorded facts. The implicit (1,1) says nothing on its own and is
/// skipped.
inline Fraction asymptotic_bound(const FactLedger& ledger) {
  std::optional<Fraction> best;
  for (const auto& f : ledger.nontrivial()) {
    const Fraction v(static_cast<std::int64_t>(f.c), static_cast<std::int64_t>(f.b));
    if (!best || v < *best) best = v;
  }
  if (!best) throw ValidationError("ledger has no facts besides (1,1)");
  return *best;
}

inline constexpr std::uint64_t kKnapsackCap = 1'000'000;

/// Largest r such that I^(m) ⊆ I^r follows from the ledger:
///   I^(m) ⊆ I^(c_1+...+c_k) = I^(c_1)···I^(c_k) ⊆ I^(b_1+...+b_k)
/// maximized over multisets of nontrivial facts with sum c_k <= m (unbounded
/// knapsack). Returns 0 when no fact fits. Above kKnapsackCap the best single
/// fact, b·floor(m/c), is used instead of the table.
inline std::uint64_t knapsack_derive(const FactLedger& ledger, std::uint64_t m) {
  if (!ledger.factorization_assumed()) {
    throw ValidationError("knapsack derivation needs factorization_assumed = true");
  }
  if (m == 0) throw ValidationError("knapsack derivation needs m >= 1");
  const auto items = ledger.nontrivial();
  if (m > kKnapsackCap) {
    std::uint64_t best = 0;
    for (const auto& f : items) best = std::max(best, f.b * (m / f.c));
    return best;
  }
  std::vector<std::uint64_t> best(m + 1, 0);
  for (std::uint64_t cap = 1; cap <= m; ++cap) {
    best[cap] = best[cap - 1];
    for (const auto& f : items) {
      if (f.c <= cap) best[cap] = std::max(best[cap], best[cap - f.c] + f.b);
    }
  }
  return best[m];
}

/// Modular derivation: assume I^(p·t + i) = (I^(p))^t · I^i for 0 <= i < p.
/// Grouping the t copies of I^(p) into facts whose c is a multiple of p
/// (I^(c) = (I^(p))^(c/p) under the same assumption) gives
///   I^(m) ⊆ I^(b_1 + ... + b_k + i),  sum c_k = p·t.
/// A block of p with no recorded fact contributes I^(p) ⊆ I^1.
inline std::uint64_t periodic_derive(const FactLedger& ledger, std::uint64_t period, std::uint64_t m) {
  if (!ledger.factorization_assumed()) {
    throw ValidationError("periodic derivation needs factorization_assumed = true");
  }
  if (period == 0 || m == 0) throw ValidationError("periodic derivation needs period, m >= 1");
  if (m > kKnapsackCap) throw ValidationError("periodic derivation is capped at m <= 10^6");
  std::vector<Fact> blocks{Fact{period, 1}};
  for (const auto& f : ledger.facts()) {
    if (f.c % period == 0) blocks.push_back(f);
  }
  const std::uint64_t t = m / period;
  const std::uint64_t i = m % period;
  // best[k]: largest sum of b over blocks with sum of c exactly k·period.
  std::vector<std::uint64_t> best(t + 1, 0);
  for (std::uint64_t k = 1; k <= t; ++k) {
    for (const auto& f : blocks) {
      const std::uint64_t units = f.c / period;
      if (units <= k) best[k] = std::max(best[k], best[k - units] + f.b);
    }
  }
  return best[t] + i;
}

}  // namespace reslab
