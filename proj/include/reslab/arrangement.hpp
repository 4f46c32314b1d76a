#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reslab/errors.hpp"
#include "reslab/ideal.hpp"
#include "reslab/monomial.hpp"

namespace reslab {

using Prime = std::vector<std::size_t>;

/// A union of coordinate subspaces. Each component is recorded by its prime:
/// the set of coordinate variables vanishing on it. Validated on
/// construction, so downstream code may assume the invariants.
class Arrangement {
 public:
  Arrangement(std::size_t num_vars, std::vector<Prime> primes, std::vector<std::string> labels = {})
      : num_vars_(num_vars), primes_(std::move(primes)), labels_(std::move(labels)) {
    if (num_vars_ == 0) throw ValidationError("arrangement needs at least one variable");
    if (primes_.empty()) throw ValidationError("arrangement needs at least one component");
    if (!labels_.empty() && labels_.size() != primes_.size()) {
      throw ValidationError("label count does not match component count");
    }
    for (auto& p : primes_) {
      std::sort(p.begin(), p.end());
      if (p.empty()) throw ValidationError("component prime must be nonempty");
      if (std::adjacent_find(p.begin(), p.end()) != p.end()) {
        throw ValidationError("component prime lists a variable twice");
      }
      if (p.back() >= num_vars_) throw ValidationError("component prime variable out of range");
      if (p.size() == num_vars_) {
        throw ValidationError("component prime must be a proper subset of the variables");
      }
    }
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      for (std::size_t k = i + 1; k < primes_.size(); ++k) {
        if (primes_[i] == primes_[k]) throw ValidationError("two components share the same prime");
      }
    }
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t num_components() const noexcept { return primes_.size(); }
  const std::vector<Prime>& primes() const noexcept { return primes_; }
  const Prime& prime(std::size_t i) const { return primes_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Variables spanning component i (complement of its prime).
  std::vector<std::size_t> free_support(std::size_t i) const {
    std::vector<std::size_t> out;
    const auto& p = primes_.at(i);
    for (std::size_t j = 0; j < num_vars_; ++j) {
      if (!std::binary_search(p.begin(), p.end(), j)) out.push_back(j);
    }
    return out;
  }

  /// Canonical form for hashing: variable count and sorted primes, labels
  /// excluded.
  std::string canonical_form() const {
    std::vector<Prime> sorted = primes_;
    std::sort(sorted.begin(), sorted.end());
    std::string out = "n=" + std::to_string(num_vars_) + ";";
    for (const auto& p : sorted) {
      out += "{";
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(p[k]);
      }
      out += "}";
    }
    return out;
  }

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.num_vars_ == b.num_vars_ && a.primes_ == b.primes_;
  }

 private:
  std::size_t num_vars_;
  std::vector<Prime> primes_;
  std::vector<std::string> labels_;
};

/// s disjoint coordinate lines in P^N; line i (0-based) spans x_{2i}, x_{2i+1}.
inline Arrangement build_pair_lines(std::int64_t s, std::int64_t N) {
  if (s < 1 || N < 1) throw ValidationError("pair lines need s >= 1 and N >= 1");
  if (2 * s > N + 1) {
    throw ValidationError("pair lines need 2s <= N+1 (got s=" + std::to_string(s) +
                          ", N=" + std::to_string(N) + ")");
  }
  const auto n = static_cast<std::size_t>(N + 1);
  std::vector<Prime> primes;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < static_cast<std::size_t>(s); ++i) {
    Prime p;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != 2 * i && j != 2 * i + 1) p.push_back(j);
    }
    primes.push_back(std::move(p));
    labels.push_back("L" + std::to_string(i + 1));
  }
  return Arrangement(n, std::move(primes), std::move(labels));
}

/// The n coordinate vertices of P^{n-1}.
inline Arrangement coordinate_points(std::int64_t n) {
  if (n < 2) throw ValidationError("coordinate points need n >= 2");
  const auto nv = static_cast<std::size_t>(n);
  std::vector<Prime> primes;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nv; ++i) {
    Prime p;
    for (std::size_t j = 0; j < nv; ++j) {
      if (j != i) p.push_back(j);
    }
    primes.push_back(std::move(p));
    labels.push_back("p" + std::to_string(i));
  }
  return Arrangement(nv, std::move(primes), std::move(labels));
}

/// mu ∈ I^(m): the degree of mu over every component's prime is at least m.
/// Nonpositive m denotes the unit ideal.
inline bool membership(const Arrangement& a, std::int64_t m, const Monomial& mu) {
  detail::require_length(mu, a.num_vars());
  if (m <= 0) return true;
  for (const auto& p : a.primes()) {
    if (degree(mu, p) < static_cast<Exponent>(m)) return false;
  }
  return true;
}

/// (x_j : j ∈ vars)^m, generated directly by all degree-m monomials in vars.
inline MonomialIdeal variable_power(const std::vector<std::size_t>& vars, std::uint64_t m,
                                    std::size_t num_vars) {
  if (m == 0) return MonomialIdeal::unit(num_vars);
  std::vector<Monomial> gens;
  std::vector<Exponent> e(num_vars, 0);
  // Distribute m units over vars[k..].
  auto rec = [&](auto&& self, std::size_t k, std::uint64_t left) -> void {
    if (k + 1 == vars.size()) {
      e[vars[k]] = left;
      gens.emplace_back(e);
      e[vars[k]] = 0;
      return;
    }
    for (std::uint64_t v = left + 1; v-- > 0;) {
      e[vars[k]] = v;
      self(self, k + 1, left - v);
    }
    e[vars[k]] = 0;
  };
  rec(rec, 0, m);
  return minimalize(std::move(gens), num_vars);
}

/// I^(m) as the intersection of the m-th powers of the component primes.
inline MonomialIdeal symbolic_power(const Arrangement& a, std::uint64_t m, const Guard& guard = {}) {
  if (m == 0) return MonomialIdeal::unit(a.num_vars());
  std::vector<MonomialIdeal> parts;
  parts.reserve(a.num_components());
  for (const auto& p : a.primes()) parts.push_back(variable_power(p, m, a.num_vars()));
  return intersect_all(std::move(parts), a.num_vars(), guard);
}

/// The radical ideal I = I^(1) of the arrangement.
inline MonomialIdeal radical_ideal(const Arrangement& a, const Guard& guard = {}) {
  return symbolic_power(a, 1, guard);
}

struct ArrangementProperties {
  std::size_t h = 0;              // max height of a component prime
  bool pairwise_disjoint = false;  // components meet nowhere in projective space
};

inline ArrangementProperties properties(const Arrangement& a) {
  ArrangementProperties out;
  for (const auto& p : a.primes()) out.h = std::max(out.h, p.size());
  out.pairwise_disjoint = true;
  for (std::size_t i = 0; i < a.num_components() && out.pairwise_disjoint; ++i) {
    for (std::size_t k = i + 1; k < a.num_components(); ++k) {
      Prime joined;
      std::set_union(a.prime(i).begin(), a.prime(i).end(), a.prime(k).begin(), a.prime(k).end(),
                     std::back_inserter(joined));
      if (joined.size() != a.num_vars()) {
        out.pairwise_disjoint = false;
        break;
      }
    }
  }
  return out;
}

/// The same components in num_vars + extra_vars variables; every new variable
/// joins every prime.
inline Arrangement embed(const Arrangement& a, std::size_t extra_vars) {
  std::vector<Prime> primes = a.primes();
  for (auto& p : primes) {
    for (std::size_t j = 0; j < extra_vars; ++j) p.push_back(a.num_vars() + j);
  }
  return Arrangement(a.num_vars() + extra_vars, std::move(primes), a.labels());
}

/// Flattening of a pair-lines arrangement in 2s variables onto the s
/// coordinate points of P^{s-1}: x_{2k}, x_{2k+1} both map to y_k.
class PhiFlattening {
 public:
  explicit PhiFlattening(const Arrangement& pairs) : target_(make_target(pairs)) {}

  const Arrangement& target() const noexcept { return target_; }

  Monomial apply(const Monomial& mu) const {
    detail::require_length(mu, 2 * target_.num_vars());
    std::vector<Exponent> out(target_.num_vars());
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = detail::checked_add(mu[2 * k], mu[2 * k + 1]);
    }
    return Monomial(std::move(out));
  }

 private:
  static Arrangement make_target(const Arrangement& a) {
    if (a.num_vars() % 2 != 0 || a.num_components() * 2 != a.num_vars()) {
      throw ValidationError("flattening needs s pair lines in exactly 2s variables");
    }
    const std::size_t s = a.num_components();
    std::vector<Prime> primes;
    std::vector<bool> seen(s, false);
    for (std::size_t i = 0; i < s; ++i) {
      const auto fs = a.free_support(i);
      if (fs.size() != 2 || fs[0] % 2 != 0 || fs[1] != fs[0] + 1 || seen[fs[0] / 2]) {
        throw ValidationError("flattening needs each component to span a pair {x_2k, x_2k+1}");
      }
      const std::size_t k = fs[0] / 2;
      seen[k] = true;
      Prime p;
      for (std::size_t j = 0; j < s; ++j) {
        if (j != k) p.push_back(j);
      }
      primes.push_back(std::move(p));
    }
    return Arrangement(s, std::move(primes), a.labels());
  }

  Arrangement target_;
};

inline PhiFlattening flatten_phi(const Arrangement& a) { return PhiFlattening(a); }

/// Variables grouped by incidence (the set of primes containing them).
/// Membership in I^(m) depends only on the per-type exponent sums, so the
/// collapsed arrangement, with one variable per type, carries the same
/// containment and degree information.
struct TypeCollapse {
  Arrangement collapsed;
  std::vector<std::vector<std::size_t>> members;  // type -> original variables

  Monomial compress(const Monomial& mu) const {
    std::vector<Exponent> out(members.size(), 0);
    for (std::size_t t = 0; t < members.size(); ++t) {
      for (std::size_t j : members[t]) out[t] = detail::checked_add(out[t], mu[j]);
    }
    return Monomial(std::move(out));
  }
};

inline TypeCollapse collapse_types(const Arrangement& a) {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_incidence;
  for (std::size_t j = 0; j < a.num_vars(); ++j) {
    std::vector<std::size_t> inc;
    for (std::size_t i = 0; i < a.num_components(); ++i) {
      if (std::binary_search(a.prime(i).begin(), a.prime(i).end(), j)) inc.push_back(i);
    }
    by_incidence[inc].push_back(j);
  }
  // Order types by their first original variable so collapse is stable.
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> types(
      by_incidence.begin(), by_incidence.end());
  std::sort(types.begin(), types.end(),
            [](const auto& x, const auto& y) { return x.second.front() < y.second.front(); });
  std::vector<Prime> primes(a.num_components());
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t t = 0; t < types.size(); ++t) {
    for (std::size_t i : types[t].first) primes[i].push_back(t);
    members.push_back(types[t].second);
  }
  return TypeCollapse{Arrangement(types.size(), std::move(primes), a.labels()), std::move(members)};
}

/// Minimal generators of I^(m) found by direct lattice-point search rather
/// than by intersecting prime powers. A feasible exponent vector is minimal
/// exactly when every variable it uses lies in some prime whose degree is
/// exactly m. Exponents never exceed m in a minimal generator.
inline MonomialIdeal enumerate_symbolic_generators(const Arrangement& a, std::uint64_t m,
                                                   std::uint64_t max_generators = 20'000'000) {
  const std::size_t n = a.num_vars();
  if (m == 0) return MonomialIdeal::unit(n);
  const std::size_t s = a.num_components();
  std::vector<std::vector<std::size_t>> incidence(n);
  std::vector<std::size_t> last_var(s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j : a.prime(i)) {
      incidence[j].push_back(i);
      last_var[i] = std::max(last_var[i], j);
    }
  }
  std::vector<Exponent> e(n, 0);
  std::vector<std::uint64_t> sums(s, 0);
  std::vector<Monomial> found;

  auto tight_somewhere = [&](std::size_t j) {
    for (std::size_t i : incidence[j]) {
      if (sums[i] == m) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      for (std::size_t i = 0; i < s; ++i) {
        if (sums[i] < m) return;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (e[k] != 0 && !tight_somewhere(k)) return;
      }
      if (found.size() >= max_generators) {
        throw ResourceError("symbolic generator enumeration exceeded " +
                            std::to_string(max_generators) + " generators");
      }
      found.emplace_back(e);
      return;
    }
    const std::uint64_t top = incidence[j].empty() ? 0 : m;
    for (std::uint64_t v = 0; v <= top; ++v) {
      e[j] = v;
      for (std::size_t i : incidence[j]) sums[i] += (v == 0 ? 0 : 1);
      // Prune: a prime whose last variable is j must already be satisfied;
      // a used variable must still be able to sit in a tight prime.
      bool ok = true;
      bool dead = v > 0;
      for (std::size_t i : incidence[j]) {
        if (last_var[i] == j && sums[i] < m) ok = false;
        if (sums[i] <= m) dead = false;
      }
      if (dead) break;
      if (ok) self(self, j + 1);
    }
    for (std::size_t i : incidence[j]) sums[i] -= e[j];
    e[j] = 0;
  };
  rec(rec, 0);
  return minimalize(std::move(found), n);
}

/// Every monomial whose per-type exponent sums equal `d`.
inline std::vector<Monomial> expand_type_vector(const TypeCollapse& tc, const Monomial& d,
                                                std::size_t num_vars) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(num_vars, 0);
  auto rec = [&](auto&& self, std::size_t t, std::size_t k, Exponent left) -> void {
    if (t == tc.members.size()) {
      out.emplace_back(e);
      return;
    }
    const auto& mem = tc.members[t];
    if (k + 1 == mem.size()) {
      e[mem[k]] = left;
      self(self, t + 1, 0, t + 1 < tc.members.size() ? d[t + 1] : 0);
      e[mem[k]] = 0;
      return;
    }
    for (Exponent v = 0; v <= left; ++v) {
      e[mem[k]] = v;
      self(self, t, k + 1, left - v);
    }
    e[mem[k]] = 0;
  };
  if (tc.members.empty()) return {Monomial(e)};
  rec(rec, 0, 0, d[0]);
  return out;
}

}  // namespace reslab
