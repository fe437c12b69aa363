#pragma once

#include <memory>
#include <string>
#include <vector>

#include "valtree/unipoly.hpp"

namespace valtree {

/// Q(a) = Q[x]/(f) for a monic irreducible integer polynomial f of degree at
/// most six.
class NumberField {
 public:
  /// Validates the modulus; throws Errc::not_irreducible_modulus.
  static std::shared_ptr<const NumberField> make(const UniPoly& modulus, std::string symbol = "a");

  const UniPoly& modulus() const { return modulus_; }
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }
  const std::string& symbol() const { return symbol_; }

  /// Reduces an arbitrary polynomial modulo f into a coordinate vector.
  std::vector<Rational> reduce(const UniPoly& p) const;

 private:
  NumberField(UniPoly modulus, std::string symbol)
      : modulus_(std::move(modulus)), symbol_(std::move(symbol)) {}
  UniPoly modulus_;
  std::string symbol_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

bool same_number_field(const NumberFieldPtr& a, const NumberFieldPtr& b);

/// Element of a number field in the power basis 1, a, ..., a^(d-1).
class AlgElem {
 public:
  AlgElem(NumberFieldPtr field, const UniPoly& value);
  AlgElem(NumberFieldPtr field, const Rational& value) : AlgElem(std::move(field), UniPoly(value)) {}

  const NumberFieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  UniPoly as_poly() const { return UniPoly(coords_); }
  bool is_zero() const;

  AlgElem inverse() const;
  /// Matrix of multiplication by this element on the power basis, row-major.
  std::vector<Rational> multiplication_matrix() const;

  friend AlgElem operator+(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator-(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator-(const AlgElem& a);
  friend bool operator==(const AlgElem& a, const AlgElem& b);

  std::string str() const { return as_poly().str(field_->symbol()); }

 private:
  NumberFieldPtr field_;
  std::vector<Rational> coords_;
};

}  // namespace valtree
