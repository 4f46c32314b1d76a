#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "reslab/errors.hpp"
#include "reslab/fraction.hpp"

namespace reslab {

/// Optimal primal/dual pair of a covering LP
///   minimize sum_j x_j  s.t.  sum_{j in row_i} x_j >= demand_i,  x >= 0.
struct CoveringLpSolution {
  Fraction value;
  std::vector<Fraction> primal;  // x, one entry per variable
  std::vector<Fraction> dual;    // y, one entry per row
};

/// True iff `sol` is primal feasible, dual feasible, and both objectives
/// agree, which certifies optimality by weak duality.
inline bool verify_covering_lp(const std::vector<std::vector<std::size_t>>& rows, std::size_t num_vars,
                               const std::vector<Fraction>& demand, const CoveringLpSolution& sol) {
  if (sol.primal.size() != num_vars || sol.dual.size() != rows.size()) return false;
  Fraction primal_obj = 0, dual_obj = 0;
  for (const auto& x : sol.primal) {
    if (x < Fraction(0)) return false;
    primal_obj += x;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Fraction lhs = 0;
    for (std::size_t j : rows[i]) lhs += sol.primal[j];
    if (lhs < demand[i]) return false;
    if (sol.dual[i] < Fraction(0)) return false;
    dual_obj += demand[i] * sol.dual[i];
  }
  std::vector<Fraction> load(num_vars, Fraction(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j : rows[i]) load[j] += sol.dual[i];
  }
  for (const auto& l : load) {
    if (Fraction(1) < l) return false;
  }
  return primal_obj == sol.value && dual_obj == sol.value;
}

/// Exact-rational simplex on the dual (packing) problem
///   maximize demand·y  s.t.  sum_{i : j in row_i} y_i <= 1,  y >= 0,
/// whose slack-free origin is feasible. Bland's rule guarantees termination.
/// The primal optimum is read off the reduced costs of the slack columns.
inline CoveringLpSolution solve_covering_lp(const std::vector<std::vector<std::size_t>>& rows,
                                            std::size_t num_vars, const std::vector<Fraction>& demand) {
  const std::size_t s = rows.size();
  const std::size_t n = num_vars;
  if (demand.size() != s) throw ValidationError("covering LP demand size mismatch");
  const std::size_t cols = s + n;  // y_0..y_{s-1}, slack_0..slack_{n-1}

  std::vector<std::vector<Fraction>> tab(n, std::vector<Fraction>(cols + 1, Fraction(0)));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j : rows[i]) {
      if (j >= n) throw ValidationError("covering LP row references a missing variable");
      tab[j][i] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    tab[j][s + j] = 1;
    tab[j][cols] = 1;
  }
  std::vector<Fraction> obj(cols + 1, Fraction(0));
  for (std::size_t i = 0; i < s; ++i) obj[i] = -demand[i];
  std::vector<std::size_t> basis(n);
  for (std::size_t j = 0; j < n; ++j) basis[j] = s + j;

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (obj[c] < Fraction(0)) {
        enter = c;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = n;
    Fraction best_ratio;
    for (std::size_t r = 0; r < n; ++r) {
      if (!(Fraction(0) < tab[r][enter])) continue;
      Fraction ratio = tab[r][cols] / tab[r][enter];
      if (leave == n || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == n) {
      // A row with positive demand and no variables: the covering problem is infeasible.
      throw ValidationError("covering LP is infeasible (a constraint has no variables)");
    }
    const Fraction pivot = tab[leave][enter];
    for (auto& v : tab[leave]) v /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == leave || tab[r][enter] == Fraction(0)) continue;
      const Fraction f = tab[r][enter];
      for (std::size_t c = 0; c <= cols; ++c) tab[r][c] -= f * tab[leave][c];
    }
    if (!(obj[enter] == Fraction(0))) {
      const Fraction f = obj[enter];
      for (std::size_t c = 0; c <= cols; ++c) obj[c] -= f * tab[leave][c];
    }
    basis[leave] = enter;
  }

  CoveringLpSolution sol;
  sol.value = obj[cols];
  sol.primal.assign(n, Fraction(0));
  for (std::size_t j = 0; j < n; ++j) sol.primal[j] = obj[s + j];
  sol.dual.assign(s, Fraction(0));
  for (std::size_t r = 0; r < n; ++r) {
    if (basis[r] < s) sol.dual[basis[r]] = tab[r][cols];
  }
  return sol;
}

}  // namespace reslab
