#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "valtree/field_elem.hpp"

namespace valtree {

/// Exact square matrix over a single Field, row-major. Immutable after
/// construction apart from assignment.
class Mat {
 public:
  /// Every entry is coerced into `field`; throws Errc::incompatible_field.
  Mat(Field field, std::size_t n, std::vector<FieldElem> entries);

  static Mat identity(const Field& field, std::size_t n);
  static Mat diagonal(const Field& field, const std::vector<FieldElem>& diag);
  static Mat from_rows(const Field& field, const std::vector<std::vector<FieldElem>>& rows);
  /// Rows of element literals in the grammar of parse_literal.
  static Mat from_literals(const Field& field, const std::vector<std::vector<std::string>>& rows);
  /// The elementary matrix I + value * E_{row,col} (0-based).
  static Mat elementary(const Field& field, std::size_t n, std::size_t row, std::size_t col,
                        const FieldElem& value);

  std::size_t dim() const { return n_; }
  const Field& field() const { return field_; }
  const FieldElem& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<FieldElem>& entries() const { return a_; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const FieldElem& s) const;
  Mat transpose() const;
  /// Square submatrix on the given row and column index sets.
  Mat minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  /// Gaussian elimination over fields, cofactor expansion over polynomials.
  FieldElem det() const;
  FieldElem trace() const;
  /// Throws Errc::singular_matrix.
  Mat inverse() const;

  bool is_identity() const;
  bool is_special_linear() const { return det().is_one(); }
  bool is_uni_upper_triangular() const;
  bool is_diagonal() const;

  /// Canonical printed form "[[a,b],[c,d]]", used as the deduplication key.
  std::string key() const;
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  std::size_t n_;
  Field field_;
  std::vector<FieldElem> a_;
};

/// Coefficients of det(lambda*I - g), lowest degree first; monic of degree n.
std::vector<FieldElem> char_poly(const Mat& g);
/// Text of a coefficient list as a polynomial in `var` (coefficients may be
/// rational functions, printed in parentheses when compound).
std::string char_poly_str(const std::vector<FieldElem>& coeffs, const std::string& var = "x");

/// Determinant by Laplace expansion with memoization over column subsets;
/// ring operations only.
FieldElem det_by_expansion(const Mat& m);

}  // namespace valtree
