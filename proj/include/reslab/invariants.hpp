#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reslab/arrangement.hpp"
#include "reslab/errors.hpp"
#include "reslab/fraction.hpp"
#include "reslab/ideal.hpp"
#include "reslab/lp.hpp"

namespace reslab {

// ---------------------------------------------------------------------------
// Covering integer program for alpha(I^(m))
// ---------------------------------------------------------------------------

/// alpha(I^(m)) is the optimum of
///   minimize sum_j e_j  s.t.  sum_{j in P_i} e_j >= m for every prime P_i,
/// e_j >= 0 integer. Variables with the same incidence are interchangeable,
/// so the program is solved over incidence types by depth-first branch and
/// bound. Nodes are pruned with two cheap bounds (largest residual demand,
/// and the root LP dual, which stays dual feasible on every subproblem) and,
/// failing those, the exact LP of the remaining subproblem.
class CoveringIlp {
 public:
  explicit CoveringIlp(const Arrangement& a) : num_primes_(a.num_components()) {
    const TypeCollapse tc = collapse_types(a);
    std::vector<std::vector<std::size_t>> incidence(tc.members.size());
    for (std::size_t i = 0; i < tc.collapsed.num_components(); ++i) {
      for (std::size_t t : tc.collapsed.prime(i)) incidence[t].push_back(i);
    }
    for (auto& inc : incidence) {
      if (!inc.empty()) incidence_.push_back(std::move(inc));
    }
    // Widest types first: they cover the most demand per unit.
    std::stable_sort(incidence_.begin(), incidence_.end(),
                     [](const auto& x, const auto& y) { return x.size() > y.size(); });
    rows_.assign(num_primes_, {});
    for (std::size_t t = 0; t < incidence_.size(); ++t) {
      for (std::size_t i : incidence_[t]) rows_[i].push_back(t);
    }
    last_type_.assign(num_primes_, 0);
    for (std::size_t i = 0; i < num_primes_; ++i) last_type_[i] = rows_[i].back();

    root_ = solve_covering_lp(rows_, incidence_.size(), std::vector<Fraction>(num_primes_, Fraction(1)));
  }

  /// Exact LP optimum for unit demand (the covering rate).
  const Fraction& lp_rate() const noexcept { return root_.value; }

  std::uint64_t solve(std::uint64_t m) const {
    if (m == 0) return 0;
    // Incumbent: round the scaled LP vertex up.
    std::uint64_t best = 0;
    for (const auto& x : root_.primal) best += static_cast<std::uint64_t>((x * Fraction(static_cast<std::int64_t>(m))).ceil());
    std::vector<std::int64_t> residual(num_primes_, static_cast<std::int64_t>(m));
    lp_memo_.clear();
    search(0, residual, 0, best);
    return best;
  }

 private:
  std::int64_t lower_bound(std::size_t t, const std::vector<std::int64_t>& residual) const {
    std::int64_t lb = 0;
    Fraction dual_bound = 0;
    for (std::size_t i = 0; i < num_primes_; ++i) {
      if (residual[i] <= 0) continue;
      if (last_type_[i] < t) return std::numeric_limits<std::int64_t>::max();
      lb = std::max(lb, residual[i]);
      dual_bound += root_.dual[i] * Fraction(residual[i]);
    }
    return std::max(lb, static_cast<std::int64_t>(dual_bound.ceil()));
  }

  std::int64_t exact_bound(std::size_t t, const std::vector<std::int64_t>& residual) const {
    auto key = std::make_pair(t, residual);
    if (auto it = lp_memo_.find(key); it != lp_memo_.end()) return it->second;
    std::vector<std::vector<std::size_t>> rows;
    std::vector<Fraction> demand;
    for (std::size_t i = 0; i < num_primes_; ++i) {
      if (residual[i] <= 0) continue;
      std::vector<std::size_t> row;
      for (std::size_t k : rows_[i]) {
        if (k >= t) row.push_back(k - t);
      }
      rows.push_back(std::move(row));
      demand.emplace_back(residual[i]);
    }
    const auto sol = solve_covering_lp(rows, incidence_.size() - t, demand);
    const auto bound = static_cast<std::int64_t>(sol.value.ceil());
    lp_memo_.emplace(std::move(key), bound);
    return bound;
  }

  void search(std::size_t t, std::vector<std::int64_t>& residual, std::uint64_t cost,
              std::uint64_t& best) const {
    bool done = true;
    for (auto r : residual) done = done && r <= 0;
    if (done) {
      best = std::min(best, cost);
      return;
    }
    if (t == incidence_.size()) return;
    const std::int64_t cheap = lower_bound(t, residual);
    if (cheap == std::numeric_limits<std::int64_t>::max()) return;
    if (cost + static_cast<std::uint64_t>(cheap) >= best) return;
    if (cost + static_cast<std::uint64_t>(exact_bound(t, residual)) >= best) return;

    std::int64_t top = 0;
    for (std::size_t i : incidence_[t]) top = std::max(top, residual[i]);
    for (std::int64_t v = top; v >= 0; --v) {
      for (std::size_t i : incidence_[t]) residual[i] -= v;
      search(t + 1, residual, cost + static_cast<std::uint64_t>(v), best);
      for (std::size_t i : incidence_[t]) residual[i] += v;
    }
  }

  std::size_t num_primes_;
  std::vector<std::vector<std::size_t>> incidence_;  // type -> primes containing it
  std::vector<std::vector<std::size_t>> rows_;       // prime -> types
  std::vector<std::size_t> last_type_;
  CoveringLpSolution root_;
  mutable std::map<std::pair<std::size_t, std::vector<std::int64_t>>, std::int64_t> lp_memo_;
};

/// alpha(I^(m)) from the covering integer program; no generators are formed.
inline std::uint64_t alpha_symbolic(const Arrangement& a, std::uint64_t m) {
  if (m == 0) throw ValidationError("alpha_symbolic needs m >= 1");
  return CoveringIlp(a).solve(m);
}

// ---------------------------------------------------------------------------
// Waldschmidt constant
// ---------------------------------------------------------------------------

/// Exact gamma with its certificate. `vertex` is an optimal vertex of the
/// covering LP with unit demand and `q` the common denominator of its
/// entries. Scaling the vertex by q gives an integral point feasible at level
/// q, so alpha(I^(qk)) = qk·value for every k; together with
/// alpha(I^(m)) >= m·value for all m this pins gamma = value exactly.
struct GammaResult {
  Fraction value;
  std::vector<Fraction> vertex;
  BigInt q;
  std::uint64_t alpha_at_q = 0;
  std::string provenance;
};

inline bool verify_gamma_certificate(const Arrangement& a, const GammaResult& g) {
  if (g.vertex.size() != a.num_vars() || g.q <= 0) return false;
  const Fraction q(g.q);
  std::vector<BigInt> scaled;
  Fraction total = 0;
  for (const auto& x : g.vertex) {
    if (x < Fraction(0)) return false;
    const Fraction sx = x * q;
    if (!sx.is_integer()) return false;
    scaled.push_back(sx.numerator());
    total += x;
  }
  if (!(total == g.value)) return false;
  for (const auto& p : a.primes()) {
    BigInt load = 0;
    for (std::size_t j : p) load += scaled[j];
    if (load < g.q) return false;
  }
  const Fraction at_q = g.value * q;
  if (!at_q.is_integer()) return false;
  if (g.q > BigInt(std::numeric_limits<std::uint32_t>::max())) return false;
  const auto level = g.q.convert_to<std::uint64_t>();
  return BigInt(alpha_symbolic(a, level)) == at_q.numerator() &&
         BigInt(g.alpha_at_q) == at_q.numerator();
}

inline GammaResult gamma_exact(const Arrangement& a) {
  GammaResult out;
  if (a.num_components() == 1) {
    out.value = 1;
    out.vertex.assign(a.num_vars(), Fraction(0));
    out.vertex[a.prime(0).front()] = 1;
    out.q = 1;
    out.alpha_at_q = 1;
    out.provenance = "complete intersection";
    return out;
  }
  const auto sol = solve_covering_lp(a.primes(), a.num_vars(), std::vector<Fraction>(a.num_components(), Fraction(1)));
  if (!verify_covering_lp(a.primes(), a.num_vars(), std::vector<Fraction>(a.num_components(), Fraction(1)), sol)) {
    throw Error("covering LP solution failed its duality check");
  }
  out.value = sol.value;
  out.vertex = sol.primal;
  out.q = 1;
  for (const auto& x : out.vertex) out.q = boost::multiprecision::lcm(out.q, x.denominator());
  out.alpha_at_q = alpha_symbolic(a, out.q.convert_to<std::uint64_t>());
  out.provenance = "covering LP optimum";
  if (!verify_gamma_certificate(a, out)) {
    throw Error("gamma certificate failed verification");
  }
  return out;
}

/// Sandwich alpha(I^(m))/(m+h-1) <= gamma <= alpha(I^(m))/m over m = 1..M.
inline BoundInterval gamma_window(const Arrangement& a, std::uint64_t max_m) {
  if (max_m == 0) throw ValidationError("gamma_window needs M >= 1");
  const auto h = static_cast<std::int64_t>(properties(a).h);
  const CoveringIlp ilp(a);
  std::optional<Fraction> lo, hi;
  std::string lo_prov, hi_prov;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    const auto am = static_cast<std::int64_t>(ilp.solve(m));
    const auto mi = static_cast<std::int64_t>(m);
    const Fraction l(am, mi + h - 1), u(am, mi);
    if (!lo || *lo < l) {
      lo = l;
      lo_prov = "alpha(I^(" + std::to_string(m) + "))/(" + std::to_string(m) + "+h-1)";
    }
    if (!hi || u < *hi) {
      hi = u;
      hi_prov = "alpha(I^(" + std::to_string(m) + "))/" + std::to_string(m);
    }
  }
  return BoundInterval(*lo, *hi, lo_prov, hi_prov);
}

// ---------------------------------------------------------------------------
// Containment
// ---------------------------------------------------------------------------

enum class ContainmentStatus { contained, not_contained };
enum class ContainmentMethod { generator_check, alpha_refutation, m_less_r_rule, derived };

inline const char* to_string(ContainmentStatus s) {
  return s == ContainmentStatus::contained ? "contained" : "not_contained";
}

inline const char* to_string(ContainmentMethod m) {
  switch (m) {
    case ContainmentMethod::generator_check: return "generator_check";
    case ContainmentMethod::alpha_refutation: return "alpha_refutation";
    case ContainmentMethod::m_less_r_rule: return "m_less_r_rule";
    case ContainmentMethod::derived: return "derived";
  }
  return "unknown";
}

/// One decided instance of I^(m) ⊆ I^r.
struct ContainmentFact {
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  ContainmentStatus status = ContainmentStatus::not_contained;
  ContainmentMethod method = ContainmentMethod::generator_check;

  bool contained() const noexcept { return status == ContainmentStatus::contained; }
  friend bool operator==(const ContainmentFact&, const ContainmentFact&) = default;
};

/// Decides containments for one arrangement, memoizing symbolic powers,
/// ordinary powers and alpha values across queries.
class ContainmentEngine {
 public:
  explicit ContainmentEngine(Arrangement a, Guard guard = {})
      : arrangement_(std::move(a)), guard_(guard), ilp_(arrangement_) {}

  const Arrangement& arrangement() const noexcept { return arrangement_; }

  const MonomialIdeal& symbolic(std::uint64_t m) {
    auto it = symbolic_.find(m);
    if (it == symbolic_.end()) it = symbolic_.emplace(m, symbolic_power(arrangement_, m, guard_)).first;
    return it->second;
  }

  const MonomialIdeal& ordinary(std::uint64_t r) {
    auto it = ordinary_.find(r);
    if (it != ordinary_.end()) return it->second;
    MonomialIdeal value = r == 0 ? MonomialIdeal::unit(arrangement_.num_vars())
                                 : product(ordinary(r - 1), symbolic(1), guard_);
    return ordinary_.emplace(r, std::move(value)).first->second;
  }

  std::uint64_t alpha(std::uint64_t m) {
    auto it = alpha_.find(m);
    if (it == alpha_.end()) it = alpha_.emplace(m, ilp_.solve(m)).first;
    return it->second;
  }

  ContainmentFact check(std::uint64_t m, std::uint64_t r) {
    if (m == 0 || r == 0) throw ValidationError("containment needs m, r >= 1");
    ContainmentFact f{m, r, ContainmentStatus::not_contained, ContainmentMethod::m_less_r_rule};
    if (m < r) return f;
    if (alpha(m) < r * alpha(1)) {
      f.method = ContainmentMethod::alpha_refutation;
      return f;
    }
    f.method = ContainmentMethod::generator_check;
    if (is_subideal(symbolic(m), ordinary(r))) f.status = ContainmentStatus::contained;
    return f;
  }

  /// facts[m-1][r-1] for 1 <= m <= max_m, 1 <= r <= max_r.
  std::vector<std::vector<ContainmentFact>> sweep(std::uint64_t max_m, std::uint64_t max_r) {
    std::vector<std::vector<ContainmentFact>> out(max_m);
    for (std::uint64_t m = 1; m <= max_m; ++m) {
      for (std::uint64_t r = 1; r <= max_r; ++r) out[m - 1].push_back(check(m, r));
    }
    return out;
  }

 private:
  Arrangement arrangement_;
  Guard guard_;
  CoveringIlp ilp_;
  std::map<std::uint64_t, MonomialIdeal> symbolic_;
  std::map<std::uint64_t, MonomialIdeal> ordinary_;
  std::map<std::uint64_t, std::uint64_t> alpha_;
};

inline ContainmentFact containment_check(const Arrangement& a, std::uint64_t m, std::uint64_t r,
                                         const Guard& guard = {}) {
  ContainmentEngine engine(a, guard);
  return engine.check(m, r);
}

// ---------------------------------------------------------------------------
// Resurgence
// ---------------------------------------------------------------------------

/// Window bracketing the asymptotic resurgence:
/// lo = alpha(I)/gamma; hi = omega(I)/gamma when the components are pairwise
/// disjoint (a smooth union of linear subspaces), otherwise min(N, h).
inline BoundInterval resurgence_window(const Arrangement& a, const Guard& guard = {}) {
  if (a.num_components() == 1) {
    return BoundInterval(Fraction(1), Fraction(1), "complete intersection", "complete intersection");
  }
  const GammaResult g = gamma_exact(a);
  const MonomialIdeal ideal = radical_ideal(a, guard);
  const auto props = properties(a);
  const Fraction lo = Fraction(static_cast<std::int64_t>(alpha(ideal))) / g.value;
  if (props.pairwise_disjoint) {
    const Fraction hi = Fraction(static_cast<std::int64_t>(omega(ideal))) / g.value;
    return BoundInterval(lo, hi, "alpha/gamma", "omega/gamma");
  }
  const auto cap = static_cast<std::int64_t>(std::min(a.num_vars() - 1, props.h));
  return BoundInterval(lo, Fraction(cap), "alpha/gamma", "height");
}

struct InvariantRecord {
  std::uint64_t alpha_I = 0;
  std::uint64_t omega_I = 0;
  std::size_t h = 0;
  std::map<std::uint64_t, std::uint64_t> alpha_symbolic_table;
  GammaResult gamma;
};

inline InvariantRecord invariant_record(const Arrangement& a, std::uint64_t max_m, const Guard& guard = {}) {
  InvariantRecord rec;
  const MonomialIdeal ideal = radical_ideal(a, guard);
  rec.alpha_I = alpha(ideal);
  rec.omega_I = omega(ideal);
  rec.h = properties(a).h;
  const CoveringIlp ilp(a);
  for (std::uint64_t m = 1; m <= max_m; ++m) rec.alpha_symbolic_table[m] = ilp.solve(m);
  rec.gamma = gamma_exact(a);
  return rec;
}

// ---------------------------------------------------------------------------
// Finite evidence for the (c, b) asymptotic bound
// ---------------------------------------------------------------------------

/// Checks I^(cm) = (I^(c))^m for m = 1..M and I^(c) ⊆ I^b. When everything
/// holds, the conditional bound rho'_a <= c/b is reported as verified up to
/// M; the equalities are never claimed for all m.
struct NoetherianEvidence {
  std::uint64_t c = 0, b = 0, max_m = 0;
  std::vector<std::pair<std::uint64_t, bool>> equalities;  // (m, holds)
  ContainmentFact containment;
  std::optional<Fraction> bound;
  std::string status;

  bool all_equalities_hold() const {
    return std::all_of(equalities.begin(), equalities.end(), [](const auto& e) { return e.second; });
  }
};

inline NoetherianEvidence noetherian_evidence(const Arrangement& a, std::uint64_t c, std::uint64_t b,
                                              std::uint64_t max_m, const Guard& guard = {}) {
  if (c == 0 || b == 0 || max_m == 0) throw ValidationError("evidence needs c, b, M >= 1");
  NoetherianEvidence ev;
  ev.c = c;
  ev.b = b;
  ev.max_m = max_m;
  ContainmentEngine engine(a, guard);
  const MonomialIdeal& base = engine.symbolic(c);
  MonomialIdeal acc = MonomialIdeal::unit(a.num_vars());
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    acc = product(acc, base, guard);
    ev.equalities.emplace_back(m, acc == symbolic_power(a, c * m, guard));
  }
  ev.containment = engine.check(c, b);
  if (ev.all_equalities_hold() && ev.containment.contained()) {
    ev.bound = Fraction(static_cast<std::int64_t>(c), static_cast<std::int64_t>(b));
    ev.status = "verified up to M=" + std::to_string(max_m);
  } else if (!ev.containment.contained()) {
    ev.status = "containment fails";
  } else {
    ev.status = "factorization fails";
  }
  return ev;
}

}  // namespace reslab
