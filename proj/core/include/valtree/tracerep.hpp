#pragma once

#include <vector>

#include "valtree/mat.hpp"
#include "valtree/word_ball.hpp"

namespace valtree {

/// n^2 group elements spanning M_n(K), with their trace form.
struct TraceBasis {
  std::vector<Mat> basis;
  std::vector<std::vector<int>> words;
  Mat gram;          // gram(j,k) = tr(g_j g_k)
  Mat gram_inverse;
  FieldElem gram_det;
  /// Word length at which the last basis element was found.
  int found_at = 0;
};

/// Order in which elements of equal word length are offered to the greedy
/// selection. Different orders give different (conjugate) representations.
enum class BasisOrder { ascending_key, descending_key };

/// Greedy search through words of length <= max_word_len. Throws
/// Errc::not_irreducible when two successive lengths add nothing or the
/// words run out before rank n^2.
TraceBasis burnside_basis(const GeneratorSet& s, int max_word_len, BasisOrder order = BasisOrder::ascending_key);

/// The matrix of h -> gamma h on M_n(K) in the basis tb.basis: column i holds
/// the coordinates of gamma * g_i. Multiplicative: alpha(ab) = alpha(a) alpha(b).
Mat alpha(const Mat& gamma, const TraceBasis& tb);

/// Coordinates of an arbitrary matrix in the trace basis.
std::vector<FieldElem> basis_coordinates(const Mat& x, const TraceBasis& tb);

/// Whether every characteristic polynomial coefficient is an algebraic
/// integer (integers over Q; integer constants over Q(t); via the
/// multiplication operator over a number field).
/// Throws Errc::incompatible_field for polynomial-ring entries.
bool integral_characteristic(const Mat& g);

}  // namespace valtree
