#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reslab/errors.hpp"

namespace reslab {

using Exponent = std::uint64_t;

namespace detail {

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("exponent overflow in monomial arithmetic");
  }
  return out;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("exponent overflow in monomial arithmetic");
  }
  return out;
}

}  // namespace detail

/// Exponent vector x0^e0 * x1^e1 * ... over a fixed number of variables.
///
/// Monomials are immutable values. The total degree and the support bitmask
/// (variables 0..63) are cached at construction so divisibility tests can
/// reject most candidates without touching the exponent array.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
    for (std::size_t j = 0; j < exps_.size(); ++j) {
      degree_ = detail::checked_add(degree_, exps_[j]);
      if (exps_[j] != 0 && j < 64) support_ |= (std::uint64_t{1} << j);
    }
  }

  Monomial(std::initializer_list<Exponent> exponents)
      : Monomial(std::vector<Exponent>(exponents)) {}

  /// The unit monomial 1 in `num_vars` variables.
  static Monomial one(std::size_t num_vars) {
    return Monomial(std::vector<Exponent>(num_vars, 0));
  }

  /// x_index in `num_vars` variables.
  static Monomial variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw ValidationError("variable index out of range");
    std::vector<Exponent> e(num_vars, 0);
    e[index] = 1;
    return Monomial(std::move(e));
  }

  std::size_t num_vars() const noexcept { return exps_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  Exponent operator[](std::size_t j) const { return exps_[j]; }
  Exponent degree() const noexcept { return degree_; }
  std::uint64_t support_mask() const noexcept { return support_; }
  bool is_one() const noexcept { return degree_ == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
  Exponent degree_ = 0;
  std::uint64_t support_ = 0;
};

namespace detail {

inline void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw ValidationError("monomial length mismatch: " + std::to_string(a.num_vars()) +
                          " vs " + std::to_string(b.num_vars()));
  }
}

}  // namespace detail

inline Monomial multiply(const Monomial& a, const Monomial& b) {
  detail::require_same_length(a, b);
  std::vector<Exponent> out(a.num_vars());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = detail::checked_add(a[j], b[j]);
  return Monomial(std::move(out));
}

/// a | b, i.e. a_j <= b_j for every j.
inline bool divides(const Monomial& a, const Monomial& b) {
  detail::require_same_length(a, b);
  if (a.degree() > b.degree()) return false;
  if ((a.support_mask() & ~b.support_mask()) != 0) return false;
  for (std::size_t j = 0; j < a.num_vars(); ++j) {
    if (a[j] > b[j]) return false;
  }
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  detail::require_same_length(a, b);
  std::vector<Exponent> out(a.num_vars());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::max(a[j], b[j]);
  return Monomial(std::move(out));
}

inline Exponent degree(const Monomial& a) { return a.degree(); }

/// Degree of `a` restricted to the variables listed in `vars`.
inline Exponent degree(const Monomial& a, std::span<const std::size_t> vars) {
  Exponent d = 0;
  for (std::size_t j : vars) {
    if (j >= a.num_vars()) throw ValidationError("variable index out of range");
    d = detail::checked_add(d, a[j]);
  }
  return d;
}

/// Canonical order: graded, then lexicographic with x0 > x1 > ... so that
/// x0*x2 precedes x0*x3 precedes x1*x2.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return canonical_less(a, b); }
};

/// "x0^2*x3", "x1", or "1".
inline std::string to_string(const Monomial& a) {
  if (a.is_one()) return "1";
  std::string out;
  for (std::size_t j = 0; j < a.num_vars(); ++j) {
    if (a[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(j);
    if (a[j] != 1) {
      out += '^';
      out += std::to_string(a[j]);
    }
  }
  return out;
}

}  // namespace reslab
