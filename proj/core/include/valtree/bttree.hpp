#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "valtree/mat.hpp"
#include "valtree/valuation.hpp"

namespace valtree {

/// A homothety class of lattices, given by a basis whose columns span a
/// representative lattice. Representatives are not unique; compare with
/// same_vertex.
class Vertex {
 public:
  /// Throws Errc::singular_matrix, Errc::incompatible_valuation.
  Vertex(Mat basis, Valuation v);

  const Mat& basis() const { return basis_; }
  const Mat& basis_inverse() const { return inverse_; }
  const Valuation& valuation() const { return v_; }
  std::size_t dim() const { return basis_.dim(); }

 private:
  friend std::int64_t distance(const Vertex&, const Vertex&);
  friend bool same_vertex(const Vertex&, const Vertex&);

  Mat basis_;
  Mat inverse_;
  Valuation v_;
  // For n = 2 over Q with a p-adic valuation: an integral basis of the same
  // class with small entries, and the valuation of its determinant.
  bool small_ = false;
  std::array<std::int64_t, 4> int_basis_{};
  std::int64_t det_val_ = 0;
};

Vertex base_vertex(const Field& field, std::size_t n, const Valuation& v);
/// Base vertex over the valuation's natural field.
Vertex base_vertex(std::size_t n, const Valuation& v);

/// Throws Errc::not_special_linear, Errc::dimension_mismatch.
Vertex act(const Mat& g, const Vertex& x);

/// Elementary-divisor valuations, ascending; partial sums are the minimal
/// valuations of k x k minors. Throws Errc::singular_matrix.
std::vector<std::int64_t> smith_valuations(const Mat& c, const Valuation& v);

bool same_vertex(const Vertex& x, const Vertex& y);

/// Tree distance for n = 2. Throws Errc::unsupported_dimension.
std::int64_t distance(const Vertex& x, const Vertex& y);

/// Invariant-factor spread s_n - s_1 of x^-1 g x. Zero exactly when g fixes x.
std::int64_t displacement(const Mat& g, const Vertex& x);

/// The p + 1 neighbours for n = 2 under a p-adic valuation.
/// Throws Errc::unsupported_dimension, Errc::infinite_residue_field.
std::vector<Vertex> neighbors(const Vertex& x);

/// Sum of squared entries. Rational-function entries are first evaluated at
/// t0; without t0 they raise Errc::needs_evaluation_point.
Rational sym_displacement(const Mat& g, const std::optional<Rational>& t0 = std::nullopt);

struct DisplacementReport {
  std::vector<std::int64_t> tree_displacements;
  std::optional<Rational> sym_proxy;
  Rational total;
};

/// Displacement at the base vertex of each valuation, plus the proxy if t0
/// handling is requested via `with_sym`.
DisplacementReport displacement_report(const Mat& g, const std::vector<Valuation>& vs, bool with_sym,
                                       const std::optional<Rational>& t0);

}  // namespace valtree
