#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "reslab/errors.hpp"
#include "reslab/fraction.hpp"

namespace reslab {

/// C(n, k) for integers; zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

namespace detail {

inline BigInt require_integral(const Fraction& f, const char* what) {
  if (!f.is_integer()) throw Error(std::string(what) + " produced a non-integral value " + f.str());
  return f.numerator();
}

inline BigInt clamp_nonnegative(const BigInt& v) { return v < 0 ? BigInt(0) : v; }

// Monomials of degree t in x0..x3 outside (x2,x3)^m, for t >= m:
// ((t+2) - (2m+1)/3)·C(m+1,2).
inline Fraction line_complement_count(std::int64_t m, std::int64_t t) {
  return (Fraction(t + 2) - Fraction(2 * m + 1, 3)) * Fraction(binomial(m + 1, 2));
}

}  // namespace detail

/// dim (I(p)^m)_t = max(0, C(t+N,N) - C(m+N-1,N)) for a point p of P^N.
inline BigInt point_power_hilbert(std::int64_t N, std::int64_t m, std::int64_t t) {
  if (N < 1 || m < 1 || t < 0) throw ValidationError("point_power_hilbert needs N >= 1, m >= 1, t >= 0");
  return detail::clamp_nonnegative(binomial(t + N, N) - binomial(m + N - 1, N));
}

/// dim I_t = max(0, C(t+N,N) - s(t+1)) for s general lines in P^N.
inline BigInt generic_lines_hilbert(std::int64_t N, std::int64_t s, std::int64_t t) {
  if (N < 3 || s < 1 || t < 0) throw ValidationError("generic_lines_hilbert needs N >= 3, s >= 1, t >= 0");
  return detail::clamp_nonnegative(binomial(t + N, N) - BigInt(s) * (t + 1));
}

/// Least t with generic_lines_hilbert(N, s, t) > 0.
inline std::int64_t generic_lines_alpha(std::int64_t N, std::int64_t s) {
  for (std::int64_t t = 0;; ++t) {
    if (generic_lines_hilbert(N, s, t) > 0) return t;
  }
}

/// dim (I(L)^m)_t for a line L in P^3.
inline BigInt line_power_hilbert_p3(std::int64_t m, std::int64_t t) {
  if (m < 1 || t < 0) throw ValidationError("line_power_hilbert_p3 needs m >= 1, t >= 0");
  if (t < m) return 0;
  const Fraction v = Fraction(binomial(t + 3, 3)) - detail::line_complement_count(m, t);
  return detail::require_integral(v, "line_power_hilbert_p3");
}

/// Expected-dimension lower bound for dim (I^(m))_t, s disjoint lines in P^3.
inline BigInt expected_symbolic_dim(std::int64_t s, std::int64_t m, std::int64_t t) {
  if (s < 1 || m < 1 || t < 0) throw ValidationError("expected_symbolic_dim needs s, m >= 1, t >= 0");
  if (t < m) return 0;
  const Fraction v = Fraction(binomial(t + 3, 3)) - Fraction(s) * detail::line_complement_count(m, t);
  return detail::clamp_nonnegative(detail::require_integral(v, "expected_symbolic_dim"));
}

/// The unclamped expected-dimension expression at (i·t, i·m):
/// C(it+3,3) - s((it+2) - (2im+1)/3)·C(im+1,2).
inline Fraction expected_dim_expression(std::int64_t s, std::int64_t m, std::int64_t t, std::int64_t i) {
  return Fraction(binomial(i * t + 3, 3)) - Fraction(s) * detail::line_complement_count(i * m, i * t);
}

/// 6·expected_dim_expression after substituting t = m·tau, as a cubic in i:
///   i^3 m^3 (tau^3 - 3s tau + 2s) + i^2 m^2 (6tau^2 - 3s tau - 3s) + i m (11tau - 5s) + 6.
inline Fraction lemma41_poly(std::int64_t s, std::int64_t m, const Fraction& tau, std::int64_t i) {
  const Fraction S(s), M(m), I(i);
  const Fraction im = I * M;
  const Fraction c3 = tau * tau * tau - Fraction(3) * S * tau + Fraction(2) * S;
  const Fraction c2 = Fraction(6) * tau * tau - Fraction(3) * S * tau - Fraction(3) * S;
  const Fraction c1 = Fraction(11) * tau - Fraction(5) * S;
  return im * im * im * c3 + im * im * c2 + im * c1 + Fraction(6);
}

/// Least i0 >= 1 such that lemma41_poly(s, m, tau, i) > 0 for every i >= i0.
/// Requires a positive leading coefficient (tau above the largest root g).
/// Past the Cauchy bound 1 + max|c_k / c_3| of the cubic in i there are no
/// roots, so only finitely many i need checking.
inline std::int64_t lemma41_positivity_threshold(std::int64_t s, std::int64_t m, const Fraction& tau) {
  const Fraction S(s), M(m);
  const Fraction c3 = (tau * tau * tau - Fraction(3) * S * tau + Fraction(2) * S) * M * M * M;
  if (!(Fraction(0) < c3)) throw ValidationError("positivity threshold needs tau above the largest root");
  const Fraction c2 = (Fraction(6) * tau * tau - Fraction(3) * S * tau - Fraction(3) * S) * M * M;
  const Fraction c1 = (Fraction(11) * tau - Fraction(5) * S) * M;
  auto absf = [](const Fraction& f) { return f < Fraction(0) ? -f : f; };
  Fraction cauchy = max(max(absf(c2), absf(c1)), Fraction(6)) / c3 + Fraction(1);
  const auto limit = static_cast<std::int64_t>(cauchy.ceil());
  std::int64_t i0 = limit;
  for (std::int64_t i = limit; i >= 1; --i) {
    if (Fraction(0) < lemma41_poly(s, m, tau, i)) {
      i0 = i;
    } else {
      break;
    }
  }
  return i0;
}

/// Family of s general lines in P^N with C(t+N,N) = s(t+1).
struct FamilyRecord {
  std::int64_t N = 0, t = 0, s = 0;
  std::int64_t alpha = 0, reg = 0;
  std::string rho_a_formula;  // "(t+1)/gamma" with t+1 substituted
};

inline FamilyRecord cor13_family(std::int64_t N, std::int64_t t) {
  if (N < 3 || t < 0) throw ValidationError("family needs N >= 3 and t >= 0");
  const BigInt total = binomial(t + N, N);
  if (total % (t + 1) != 0) {
    throw ValidationError("C(t+N,N)/(t+1) = " + total.str() + "/" + std::to_string(t + 1) +
                          " is not an integer");
  }
  FamilyRecord out;
  out.N = N;
  out.t = t;
  out.s = (total / (t + 1)).convert_to<std::int64_t>();
  out.alpha = t + 1;
  out.reg = t + 1;
  out.rho_a_formula = std::to_string(t + 1) + "/gamma";
  return out;
}

/// Certified bracket for the largest real root g of tau^3 - 3s tau + 2s.
struct CubicRootResult {
  std::int64_t s = 0;
  Fraction g_lo, g_hi, tolerance;
};

inline Fraction cubic_g(std::int64_t s, const Fraction& tau) {
  return tau * tau * tau - Fraction(3 * s) * tau + Fraction(2 * s);
}

/// Exact bisection with dyadic midpoints from [max(1, sqrt(3s) - 3/4), sqrt(3s)]
/// (rational under/over-approximations). The cubic is increasing beyond
/// sqrt(s), which lies below the starting bracket for s >= 2, so the bracket
/// holds exactly one sign change. s = 1 has the double root 1.
inline CubicRootResult largest_root_g(std::int64_t s, const Fraction& tolerance = Fraction(1, 1LL << 30)) {
  if (s < 1) throw ValidationError("largest_root_g needs s >= 1");
  if (!(Fraction(0) < tolerance)) throw ValidationError("tolerance must be positive");
  CubicRootResult out;
  out.s = s;
  out.tolerance = tolerance;
  if (s == 1) {
    out.g_lo = out.g_hi = Fraction(1);
    return out;
  }
  const Fraction three_s(3 * s);
  const int bits = 48;
  const BigInt scale = BigInt(1) << bits;
  const BigInt root = boost::multiprecision::sqrt(BigInt(3 * s) * scale * scale);
  const bool exact = root * root == BigInt(3 * s) * scale * scale;
  Fraction hi(exact ? root : root + 1, scale);
  Fraction lo = max(Fraction(1), Fraction(root, scale) - Fraction(3, 4));
  if (!(cubic_g(s, lo) < Fraction(0)) || !(Fraction(0) < cubic_g(s, hi))) {
    throw Error("initial bracket for g does not straddle the root");
  }
  auto certified = [&] {
    const Fraction shifted = lo + Fraction(3, 4);
    return hi * hi < three_s && three_s < shifted * shifted;
  };
  while (tolerance < hi - lo || !certified()) {
    const Fraction mid = (lo + hi) / Fraction(2);
    const Fraction v = cubic_g(s, mid);
    if (v == Fraction(0)) {
      lo = hi = mid;
      break;
    }
    if (v < Fraction(0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.g_lo = lo;
  out.g_hi = hi;
  return out;
}

struct ExploreRow {
  std::int64_t m = 0;
  std::int64_t alpha_hat = 0;
  Fraction alpha_hat_over_m;
  bool below_g = false;  // alpha_hat/m < g_lo - slack
};

struct ExploreTable {
  std::int64_t s = 0;
  CubicRootResult g;
  double sqrt3s = 0.0;
  std::vector<ExploreRow> rows;
};

/// Conjectural alpha_hat(m): least t with expected_symbolic_dim(s, m, t) > 0.
/// Only an upper bound for alpha(I^(m)) in general; tabulated against g.
inline ExploreTable conjecture_explore(std::int64_t s, std::int64_t max_m, const Fraction& slack = Fraction(0)) {
  if (s < 1 || max_m < 1) throw ValidationError("explore needs s >= 1 and m_max >= 1");
  ExploreTable table;
  table.s = s;
  table.g = largest_root_g(s);
  table.sqrt3s = std::sqrt(3.0 * static_cast<double>(s));
  for (std::int64_t m = 1; m <= max_m; ++m) {
    std::int64_t t = m;
    while (expected_symbolic_dim(s, m, t) == 0) ++t;
    ExploreRow row;
    row.m = m;
    row.alpha_hat = t;
    row.alpha_hat_over_m = Fraction(t, m);
    row.below_g = row.alpha_hat_over_m < table.g.g_lo - slack;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace reslab
