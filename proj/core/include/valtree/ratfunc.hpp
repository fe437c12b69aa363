#pragma once

#include <string>
#include <string_view>

#include "valtree/unipoly.hpp"

namespace valtree {

/// Element of Q(t): numerator and denominator coprime, denominator monic.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const UniPoly& p) : num_(p), den_(Rational(1)) {}   // NOLINT(google-explicit-constructor)
  /// Cancels the gcd and makes the denominator monic; throws
  /// Errc::division_by_zero for a zero denominator.
  RatFunc(UniPoly num, UniPoly den);

  /// t^k for any integer k.
  static RatFunc power_of_t(long k);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// Throws Errc::needs_evaluation_point when x is a pole.
  Rational eval(const Rational& x) const;
  RatFunc inverse() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// "P" for polynomials, "(P)/(Q)" otherwise.
  std::string str(std::string_view var = "t") const;

 private:
  struct Canonical {};
  RatFunc(UniPoly num, UniPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  UniPoly num_;
  UniPoly den_;
};

}  // namespace valtree
