#pragma once

#include <string>

#include "valtree/ext_int.hpp"
#include "valtree/field_elem.hpp"

namespace valtree {

/// A discrete valuation descriptor.
///
/// PAdic applies to Q only; the three order valuations apply to Q(t) only.
/// Number field elements and polynomials carry no valuation.
class Valuation {
 public:
  enum class Kind { padic, order_at_zero, order_at_infinity, order_at_irreducible };

  /// Throws Errc::not_prime.
  static Valuation padic(unsigned long p);
  static Valuation order_at_zero() { return Valuation(Kind::order_at_zero); }
  static Valuation order_at_infinity() { return Valuation(Kind::order_at_infinity); }
  /// q is made monic; throws Errc::not_irreducible_modulus if reducible.
  static Valuation order_at_irreducible(const UniPoly& q);

  Kind kind() const { return kind_; }
  unsigned long prime() const { return p_; }
  const UniPoly& irreducible() const { return q_; }

  bool applies_to(FieldKind kind) const;
  /// Q for PAdic, Q(t) otherwise.
  Field natural_field() const;

  /// "padic(2)", "order_at_zero", "order_at_infinity", "order_at(t^2+1)".
  std::string str() const;
  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  explicit Valuation(Kind k) : kind_(k) {}
  Kind kind_;
  unsigned long p_ = 0;
  UniPoly q_;
};

/// nu(x); +inf exactly for zero. Throws Errc::incompatible_valuation.
ExtInt valuate(const Valuation& v, const FieldElem& x);
/// An element of valuation one.
FieldElem uniformizer(const Valuation& v);
/// Whether x lies in the valuation ring.
bool is_integral(const Valuation& v, const FieldElem& x);

}  // namespace valtree
