#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "valtree/ext_int.hpp"

namespace valtree {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}        // NOLINT(google-explicit-constructor)
  /// Throws Errc::division_by_zero when den == 0.
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) {}

  /// Accepts "a" or "a/b" with optional sign.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  /// Throws Errc::division_by_zero on zero.
  Rational inverse() const;

  /// Exponent of p in this number; +inf for zero.
  ExtInt padic_valuation(unsigned long p) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Canonical text: "a" for integers, "a/b" otherwise.
  std::string str() const { return q_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// 2^k as an exact rational (k may be negative).
Rational pow2(std::int64_t k);
/// base^k for k of either sign; base must be nonzero when k < 0.
Rational pow(const Rational& base, std::int64_t k);

bool is_prime(unsigned long p);

}  // namespace valtree
