#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reslab/errors.hpp"
#include "reslab/monomial.hpp"

namespace reslab {

/// Work limit for pairwise expansions (products, intersections). A step that
/// would form more candidate pairs than `pair_limit` before minimalization
/// throws ResourceError instead of exhausting memory.
struct Guard {
  std::uint64_t pair_limit = 5'000'000;

  void check(std::uint64_t pairs, const char* what) const {
    if (pairs > pair_limit) {
      throw ResourceError(std::string(what) + ": " + std::to_string(pairs) +
                          " candidate pairs exceed the guard of " + std::to_string(pair_limit));
    }
  }
};

class MonomialIdeal;
MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t num_vars);

/// Monomial ideal held as its canonical minimal generating set: irredundant,
/// sorted by canonical_less, no duplicates. An empty generator list is the
/// zero ideal and the single generator 1 is the unit ideal.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(std::size_t num_vars) { return MonomialIdeal(num_vars, {}); }
  static MonomialIdeal unit(std::size_t num_vars) {
    return MonomialIdeal(num_vars, {Monomial::one(num_vars)});
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) noexcept {
    return a.num_vars_ == b.num_vars_ && a.gens_ == b.gens_;
  }

 private:
  friend MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t num_vars);

  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens)
      : num_vars_(num_vars), gens_(std::move(gens)) {}

  std::size_t num_vars_ = 0;
  std::vector<Monomial> gens_;
};

namespace detail {

inline void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) {
    throw ValidationError("ideal ring mismatch: " + std::to_string(a.num_vars()) + " vs " +
                          std::to_string(b.num_vars()) + " variables");
  }
}

inline void require_length(const Monomial& m, std::size_t num_vars) {
  if (m.num_vars() != num_vars) {
    throw ValidationError("monomial has " + std::to_string(m.num_vars()) +
                          " exponents, expected " + std::to_string(num_vars));
  }
}

}  // namespace detail

/// Trie over exponent vectors answering "does some stored monomial divide
/// this one?" without scanning every stored element.
class DivisorIndex {
 public:
  explicit DivisorIndex(std::size_t num_vars) : num_vars_(num_vars), nodes_(1) {}

  void insert(const Monomial& m) {
    std::size_t node = 0;
    for (std::size_t j = 0; j < num_vars_; ++j) {
      auto& kids = nodes_[node].children;
      auto it = std::lower_bound(kids.begin(), kids.end(), m[j],
                                 [](const auto& kid, Exponent e) { return kid.first < e; });
      if (it != kids.end() && it->first == m[j]) {
        node = it->second;
      } else {
        const std::size_t fresh = nodes_.size();
        kids.insert(it, {m[j], fresh});
        nodes_.emplace_back();
        node = fresh;
      }
    }
    ++size_;
  }

  bool has_divisor_of(const Monomial& m) const {
    return size_ != 0 && search(0, 0, m);
  }

  std::size_t size() const noexcept { return size_; }

 private:
  struct Node {
    std::vector<std::pair<Exponent, std::size_t>> children;
  };

  bool search(std::size_t node, std::size_t depth, const Monomial& m) const {
    if (depth == num_vars_) return true;
    for (const auto& [e, child] : nodes_[node].children) {
      if (e > m[depth]) break;
      if (search(child, depth + 1, m)) return true;
    }
    return false;
  }

  std::size_t num_vars_;
  std::vector<Node> nodes_;
  std::size_t size_ = 0;
};

/// Irredundant, canonically sorted subset of `gens` generating the same ideal.
inline MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t num_vars) {
  for (const auto& g : gens) detail::require_length(g, num_vars);
  std::sort(gens.begin(), gens.end(), CanonicalLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // In degree order a candidate can only be divided by something already kept.
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  DivisorIndex index(num_vars);
  for (auto& g : gens) {
    if (index.has_divisor_of(g)) continue;
    index.insert(g);
    kept.push_back(std::move(g));
  }
  return MonomialIdeal(num_vars, std::move(kept));
}

inline bool contains_monomial(const MonomialIdeal& ideal, const Monomial& mu) {
  detail::require_length(mu, ideal.num_vars());
  for (const auto& g : ideal.generators()) {
    if (g.degree() > mu.degree()) break;
    if (divides(g, mu)) return true;
  }
  return false;
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b, const Guard& guard = {}) {
  detail::require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.num_vars());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  guard.check(std::uint64_t{a.size()} * b.size(), "product");
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) out.push_back(multiply(g, h));
  }
  return minimalize(std::move(out), a.num_vars());
}

/// I^r by iterated multiplication with minimalization after each step.
inline MonomialIdeal power(const MonomialIdeal& ideal, std::uint64_t r, const Guard& guard = {}) {
  MonomialIdeal acc = MonomialIdeal::unit(ideal.num_vars());
  for (std::uint64_t k = 0; k < r; ++k) acc = product(acc, ideal, guard);
  return acc;
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b, const Guard& guard = {}) {
  detail::require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.num_vars());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  guard.check(std::uint64_t{a.size()} * b.size(), "intersection");
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) out.push_back(lcm(g, h));
  }
  return minimalize(std::move(out), a.num_vars());
}

/// Intersection of several ideals, folding pairwise from the smallest
/// generator count upwards.
inline MonomialIdeal intersect_all(std::vector<MonomialIdeal> ideals, std::size_t num_vars,
                                   const Guard& guard = {}) {
  if (ideals.empty()) return MonomialIdeal::unit(num_vars);
  std::stable_sort(ideals.begin(), ideals.end(),
                   [](const MonomialIdeal& x, const MonomialIdeal& y) { return x.size() < y.size(); });
  MonomialIdeal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = intersect(acc, ideals[k], guard);
  return acc;
}

/// I ⊆ J.
inline bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_ring(a, b);
  if (a.size() * b.size() < 4096) {
    for (const auto& g : a.generators()) {
      if (!contains_monomial(b, g)) return false;
    }
    return true;
  }
  DivisorIndex index(b.num_vars());
  for (const auto& h : b.generators()) index.insert(h);
  for (const auto& g : a.generators()) {
    if (!index.has_divisor_of(g)) return false;
  }
  return true;
}

/// Least generator degree.
inline Exponent alpha(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ValidationError("alpha of the zero ideal is undefined");
  return ideal.generators().front().degree();
}

/// Largest degree in the minimal generating set.
inline Exponent omega(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ValidationError("omega of the zero ideal is undefined");
  return ideal.generators().back().degree();
}

/// "x0*x2, x0*x3, x1*x2"; "0" for the zero ideal.
inline std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g);
  }
  return out;
}

}  // namespace reslab
