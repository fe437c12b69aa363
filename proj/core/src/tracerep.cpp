#include "valtree/tracerep.hpp"

#include <algorithm>

#include "valtree/error.hpp"
#include "valtree/valuation.hpp"

namespace valtree {

namespace {

/// Row echelon form over an arbitrary field of FieldElem.
class FieldReducer {
 public:
  bool add(std::vector<FieldElem> row) {
    for (const auto& [pivot, r] : rows_) {
      if (!row[pivot].is_zero()) {
        const FieldElem f = row[pivot];
        for (std::size_t c = pivot; c < row.size(); ++c) row[c] -= f * r[c];
      }
    }
    auto it = std::find_if(row.begin(), row.end(), [](const FieldElem& x) { return !x.is_zero(); });
    if (it == row.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - row.begin());
    const FieldElem inv = row[pivot].inverse();
    for (std::size_t c = pivot; c < row.size(); ++c) row[c] *= inv;
    for (auto& [p, r] : rows_) {
      if (!r[pivot].is_zero()) {
        const FieldElem f = r[pivot];
        for (std::size_t c = pivot; c < r.size(); ++c) r[c] -= f * row[c];
      }
    }
    rows_.emplace_back(pivot, std::move(row));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, std::vector<FieldElem>>> rows_;
};

}  // namespace

TraceBasis burnside_basis(const GeneratorSet& s, int max_word_len, BasisOrder order) {
  const std::size_t n = s.dim();
  const std::size_t target = n * n;
  const WordBall ball = word_ball(s, max_word_len);

  std::vector<const BallElement*> sorted;
  for (const auto& e : ball.elements()) sorted.push_back(&e);
  std::stable_sort(sorted.begin(), sorted.end(), [&](const BallElement* a, const BallElement* b) {
    if (a->length != b->length) return a->length < b->length;
    return order == BasisOrder::ascending_key ? a->key < b->key : a->key > b->key;
  });

  FieldReducer fr;
  TraceBasis tb{{}, {}, Mat::identity(s.field(), 1), Mat::identity(s.field(), 1), s.field().one(), 0};
  int idle = 0;
  int current = 0;
  std::size_t rank_at_start = 0;
  for (const BallElement* e : sorted) {
    if (e->length != current) {
      idle = fr.rank() == rank_at_start ? idle + (e->length - current) : 0;
      if (idle >= 2) break;
      current = e->length;
      rank_at_start = fr.rank();
    }
    if (fr.add(e->element.entries())) {
      tb.basis.push_back(e->element);
      tb.words.push_back(e->word);
      tb.found_at = e->length;
      if (fr.rank() == target) break;
    }
  }
  if (fr.rank() < target)
    raise(Errc::not_irreducible, "words of length <= " + std::to_string(max_word_len) + " span only dimension " +
                                     std::to_string(fr.rank()) + " of " + std::to_string(target));

  std::vector<FieldElem> g;
  g.reserve(target * target);
  for (std::size_t j = 0; j < target; ++j)
    for (std::size_t k = 0; k < target; ++k) g.push_back((tb.basis[j] * tb.basis[k]).trace());
  tb.gram = Mat(s.field(), target, std::move(g));
  tb.gram_det = tb.gram.det();
  if (tb.gram_det.is_zero()) raise(Errc::invariant_violation, "trace form degenerate on a spanning set");
  tb.gram_inverse = tb.gram.inverse();
  return tb;
}

std::vector<FieldElem> basis_coordinates(const Mat& x, const TraceBasis& tb) {
  // x = sum_j c_j g_j gives tr(x g_k) = sum_j c_j gram(j,k).
  const std::size_t m = tb.basis.size();
  std::vector<FieldElem> out(m, x.field().zero());
  for (std::size_t k = 0; k < m; ++k) {
    const FieldElem t = (x * tb.basis[k]).trace();
    for (std::size_t j = 0; j < m; ++j) out[j] += t * tb.gram_inverse(k, j);
  }
  return out;
}

Mat alpha(const Mat& gamma, const TraceBasis& tb) {
  if (tb.basis.empty() || gamma.dim() != tb.basis.front().dim())
    raise(Errc::dimension_mismatch, "gamma does not act on the basis algebra");
  const std::size_t m = tb.basis.size();
  std::vector<FieldElem> out(m * m, gamma.field().zero());
  for (std::size_t i = 0; i < m; ++i) {
    const auto c = basis_coordinates(gamma * tb.basis[i], tb);
    for (std::size_t j = 0; j < m; ++j) out[j * m + i] = c[j];
  }
  return Mat(gamma.field(), m, std::move(out));
}

namespace {

bool integral_over_q(const FieldElem& c) {
  switch (c.kind()) {
    case FieldKind::rational:
      return c.as_rational().is_integer();
    case FieldKind::ratfunc: {
      if (!is_integral(Valuation::order_at_zero(), c) || !is_integral(Valuation::order_at_infinity(), c))
        return false;
      const RatFunc& r = c.as_ratfunc();
      return r.den().is_constant() && r.num().has_integer_coeffs();
    }
    case FieldKind::algebraic: {
      const AlgElem& a = c.as_algebraic();
      const std::size_t d = a.field()->degree();
      const auto mm = a.multiplication_matrix();
      std::vector<FieldElem> entries(mm.begin(), mm.end());
      for (const auto& k : char_poly(Mat(Field::rationals(), d, std::move(entries))))
        if (!k.as_rational().is_integer()) return false;
      return true;
    }
    case FieldKind::multipoly:
      break;
  }
  raise(Errc::incompatible_field, "integral characteristic is undefined over polynomial rings");
}

}  // namespace

bool integral_characteristic(const Mat& g) {
  if (g.field().kind() == FieldKind::multipoly)
    raise(Errc::incompatible_field, "integral characteristic is undefined over polynomial rings");
  for (const auto& c : char_poly(g))
    if (!integral_over_q(g.field().coerce(c))) return false;
  return true;
}

}  // namespace valtree
