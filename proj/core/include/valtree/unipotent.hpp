#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "valtree/mat.hpp"
#include "valtree/multipoly.hpp"
#include "valtree/word_ball.hpp"

namespace valtree {

/// Rank over Q of the span of `elems` (Rational, RatFunc, AlgElem or
/// MultiPoly; rationals combine with any one other family).
/// Throws Errc::mixed_families.
std::size_t q_rank(const std::vector<FieldElem>& elems);

/// Rank over Q of a list of equal-length tuples, each read as the
/// concatenation of its entries' coordinate vectors.
std::size_t q_rank_tuples(const std::vector<std::vector<FieldElem>>& tuples);

/// A maximal Q-independent sublist, chosen greedily in input order.
std::vector<FieldElem> q_basis(const std::vector<FieldElem>& elems);

using Position = std::pair<std::size_t, std::size_t>;  // 0-based (row, col)

struct LayerMap {
  std::size_t k;  // superdiagonal index
  bool residual;
  std::vector<Position> positions;
};

/// Superdiagonals 1..n-2, then the residual corner (1,n). For n = 2 only the
/// residual corner. Throws Errc::invalid_argument for n < 2.
std::vector<LayerMap> layer_decompose(std::size_t n);

struct EntrySpan {
  Position position;
  std::vector<FieldElem> basis;
};

struct LayerLower {
  LayerMap layer;
  std::size_t rank;  // Q-rank of the collected tuples
  std::vector<EntrySpan> spans;  // per-position bases of observed entries
  std::size_t members;  // ball elements lying in G_{k-1}
};

/// Lower bound for one layer from the word ball of radius L.
/// Throws Errc::not_unipotent_form, Errc::ball_too_large.
LayerLower entry_span_lower(const GeneratorSet& s, const LayerMap& layer, int L);
LayerLower entry_span_lower(const WordBall& ball, std::size_t n, const LayerMap& layer);

/// Spans closed under the products that matrix multiplication produces; every
/// entry of every group element lies in the span at its position.
std::map<Position, EntrySpan> entry_span_upper(const GeneratorSet& s);

struct LayerBounds {
  LayerMap layer;
  std::size_t lower;
  std::size_t upper;
  std::vector<EntrySpan> lower_spans;
  std::vector<EntrySpan> upper_spans;
};

struct RankBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<LayerBounds> per_layer;
  int saturation_length = 0;
  bool closed() const { return lower == upper; }
};

RankBounds composition_rank_bounds(const GeneratorSet& s, int L, std::size_t cap = kDefaultBallCap);

/// Whether every entry above the diagonal of g lies in the span at its
/// position. Throws Errc::not_unipotent_form.
bool structure_check(const Mat& g, const std::map<Position, EntrySpan>& spans);

/// det[p_j(t_i)] where row i uses the fresh variable block
/// t_{i*arity+1} .. t_{i*arity+arity}.
MultiPoly independence_determinant(const std::vector<MultiPoly>& polys, std::size_t arity);

struct BoundednessWitness {
  std::vector<Rational> points;  // evaluation parameters tau_i
  Mat system;                    // M_ij = u_j at tau_i
  Mat inverse;
  Rational determinant;
  /// det M agrees with the independence determinant at the same points.
  bool determinant_consistent = false;
  /// Any integer tuple z whose images sum_j z_j u_j(tau_i) are bounded by B
  /// in absolute value has every |z_j| <= box_bound.
  Rational box_bound;
};

/// Throws Errc::degenerate_span when the basis is Q-dependent.
BoundednessWitness boundedness_witness(const EntrySpan& span, const Rational& bound);

}  // namespace valtree
