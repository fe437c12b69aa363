#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "valtree/algebraic.hpp"
#include "valtree/multipoly.hpp"
#include "valtree/ratfunc.hpp"
#include "valtree/rational.hpp"

namespace valtree {

enum class FieldKind { rational, ratfunc, algebraic, multipoly };

std::string_view field_kind_name(FieldKind kind);

/// An exact element of one of the supported families. Values are always in
/// canonical form, so structural equality is mathematical equality.
///
/// Binary operations require both operands in the same family, except that a
/// Rational operand is embedded into the other operand's family.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Rational v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  FieldElem(T v) : v_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  FieldElem(RatFunc v) : v_(std::move(v)) {}    // NOLINT(google-explicit-constructor)
  FieldElem(AlgElem v) : v_(std::move(v)) {}    // NOLINT(google-explicit-constructor)
  FieldElem(MultiPoly v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  FieldKind kind() const { return static_cast<FieldKind>(v_.index()); }

  const Rational& as_rational() const;
  const RatFunc& as_ratfunc() const;
  const AlgElem& as_algebraic() const;
  const MultiPoly& as_multipoly() const;

  bool is_zero() const;
  bool is_one() const;

  /// Multiplicative inverse; MultiPoly only admits nonzero constants.
  FieldElem inverse() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  /// Canonical literal text; parse_literal inverts it.
  std::string str() const;

 private:
  std::variant<Rational, RatFunc, AlgElem, MultiPoly> v_;
};

/// Canonicalizes an element. Every constructor already canonicalizes, so this
/// is the identity on values and exists as the explicit normalization entry
/// point.
FieldElem normalize(const FieldElem& x);
/// num/den in lowest terms; throws Errc::division_by_zero.
FieldElem make_rational(const Integer& num, const Integer& den);
/// num/den with gcd cancelled and monic denominator.
FieldElem make_ratfunc(const UniPoly& num, const UniPoly& den);

/// The ambient field of a matrix or scenario: Q, Q(t), a number field, or the
/// polynomial ring Q[t1, t2, ...].
class Field {
 public:
  static Field rationals() { return Field(FieldKind::rational, nullptr); }
  static Field rational_functions() { return Field(FieldKind::ratfunc, nullptr); }
  static Field polynomials() { return Field(FieldKind::multipoly, nullptr); }
  static Field number_field(NumberFieldPtr nf) { return Field(FieldKind::algebraic, std::move(nf)); }

  FieldKind kind() const { return kind_; }
  const NumberFieldPtr& number_field() const { return nf_; }

  FieldElem zero() const { return embed(Rational(0)); }
  FieldElem one() const { return embed(Rational(1)); }
  FieldElem embed(const Rational& r) const;
  /// Embeds Rationals and checks that other elements already belong here;
  /// throws Errc::incompatible_field otherwise.
  FieldElem coerce(const FieldElem& x) const;
  bool contains(const FieldElem& x) const;

  std::string str() const;
  friend bool operator==(const Field& a, const Field& b);

 private:
  Field(FieldKind kind, NumberFieldPtr nf) : kind_(kind), nf_(std::move(nf)) {}
  FieldKind kind_;
  NumberFieldPtr nf_;
};

/// Parses the element literal grammar into `field`:
///   rationals "a/b" or "a"; polynomials as +/- separated terms "c*t^k" with
///   optional "c*" and "^k"; rational functions "(P)/(Q)"; whitespace ignored.
/// The indeterminate is "t" for Q(t), the field's symbol for number fields,
/// and "t1", "t2", ... for multivariate polynomials. Negative exponents are
/// accepted for t.
FieldElem parse_literal(std::string_view text, const Field& field);

}  // namespace valtree
