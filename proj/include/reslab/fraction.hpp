#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "reslab/errors.hpp"

namespace reslab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with a positive denominator.
class Fraction {
 public:
  Fraction() = default;
  Fraction(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Fraction(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Fraction(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("fraction with zero denominator");
    value_ = Rational(num, den);
  }
  Fraction(std::int64_t num, std::int64_t den) : Fraction(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_integer() const { return denominator() == 1; }

  /// Least integer >= value.
  BigInt ceil() const {
    BigInt n = numerator(), d = denominator();
    BigInt q = n / d;  // truncates toward zero
    if (q * d != n && n > 0) q += 1;
    return q;
  }

  /// Greatest integer <= value.
  BigInt floor() const {
    BigInt n = numerator(), d = denominator();
    BigInt q = n / d;
    if (q * d != n && n < 0) q -= 1;
    return q;
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const {
    const BigInt d = denominator();
    if (d == 1) return numerator().str();
    return numerator().str() + "/" + d.str();
  }

  double to_double() const { return value_.convert_to<double>(); }

  Fraction& operator+=(const Fraction& o) { value_ += o.value_; return *this; }
  Fraction& operator-=(const Fraction& o) { value_ -= o.value_; return *this; }
  Fraction& operator*=(const Fraction& o) { value_ *= o.value_; return *this; }
  Fraction& operator/=(const Fraction& o) {
    if (o.value_ == 0) throw ValidationError("division by zero fraction");
    value_ /= o.value_;
    return *this;
  }

  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }
  friend Fraction operator-(const Fraction& a) { Fraction out; out.value_ = -a.value_; return out; }

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using Rational = boost::multiprecision::cpp_rational;
  explicit Fraction(Rational r) : value_(std::move(r)) {}
  Rational value_;
};

inline Fraction min(const Fraction& a, const Fraction& b) { return b < a ? b : a; }
inline Fraction max(const Fraction& a, const Fraction& b) { return a < b ? b : a; }

/// Closed interval [lo, hi] of exact rationals, each end tagged with the rule
/// that produced it.
struct BoundInterval {
  Fraction lo;
  Fraction hi;
  std::string lo_provenance;
  std::string hi_provenance;

  BoundInterval(Fraction lo_, Fraction hi_, std::string lo_prov, std::string hi_prov)
      : lo(std::move(lo_)), hi(std::move(hi_)),
        lo_provenance(std::move(lo_prov)), hi_provenance(std::move(hi_prov)) {
    if (hi < lo) {
      throw Error("empty bound interval [" + lo.str() + ", " + hi.str() + "]");
    }
  }

  bool contains(const Fraction& x) const { return lo <= x && x <= hi; }
  Fraction width() const { return hi - lo; }
};

}  // namespace reslab
