#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "valtree/rational.hpp"

namespace valtree {

/// Exponent vector with trailing zeros trimmed, so polynomials in different
/// numbers of variables compare and combine directly.
using Monomial = std::vector<std::uint32_t>;

/// Sparse polynomial over Q in variables t1, t2, ... (0-based index
/// internally). Zero coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// The single variable with 0-based index `index`.
  static MultiPoly variable(std::size_t index);
  static MultiPoly term(const Rational& c, Monomial exps);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// One more than the largest variable index in use.
  std::size_t arity() const;
  std::size_t total_degree() const;

  /// Renames variable j to offset + j.
  MultiPoly shift_variables(std::size_t offset) const;
  /// Evaluates at a point; missing coordinates are treated as zero.
  Rational eval(const std::vector<Rational>& point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Terms in descending lexicographic exponent order, e.g. "-t1+t2".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

}  // namespace valtree
