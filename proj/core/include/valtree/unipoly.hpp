#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "valtree/rational.hpp"

namespace valtree {

/// Dense univariate polynomial over Q, lowest degree first, with no trailing
/// zero coefficient. The zero polynomial is the empty list.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static UniPoly monomial(const Rational& c, std::size_t k);
  /// The indeterminate itself.
  static UniPoly x() { return monomial(Rational(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 stands for the degree of the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; the zero polynomial has none
  /// and callers must check is_zero first.
  std::size_t lowest_index() const;

  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  UniPoly monic() const;
  Rational eval(const Rational& x) const;
  /// Common denominator times the polynomial, divided by the content; the
  /// leading coefficient is made positive.
  UniPoly primitive_integer() const;
  bool has_integer_coeffs() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Euclidean division; throws on zero divisor.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);
  /// Bezout: returns (g, s, t) with s*a + t*b = g = gcd(a, b).
  static std::tuple<UniPoly, UniPoly, UniPoly> xgcd(const UniPoly& a, const UniPoly& b);

  /// Canonical text in the literal grammar using `var` as the indeterminate,
  /// highest degree first, e.g. "3*t^2-t+1/2".
  std::string str(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Irreducibility over Q for polynomials of degree at most 6: rational root
/// test followed by Kronecker trial factorization up to half the degree.
/// Throws Errc::invalid_argument above degree 6.
bool is_irreducible_over_q(const UniPoly& f);

inline constexpr int kMaxIrreducibleDegree = 6;

}  // namespace valtree
