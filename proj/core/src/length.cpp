#include "valtree/length.hpp"

#include <algorithm>

#include "valtree/error.hpp"

namespace valtree {

namespace {

void require_special_linear(const Mat& g) {
  if (!g.is_special_linear()) raise(Errc::not_special_linear, "det != 1 for " + g.key());
}

ExtInt min_entry_valuation(const Valuation& v, const Mat& g) {
  ExtInt m = ExtInt::infinity();
  for (const auto& e : g.entries()) m = min(m, valuate(v, e));
  return m;
}

}  // namespace

ExtInt length(const Valuation& v, const Mat& g) {
  require_special_linear(g);
  const ExtInt m = min(min_entry_valuation(v, g), min_entry_valuation(v, g.inverse()));
  // det = 1 rules out an all-zero matrix, so m is finite.
  return ExtInt(-m.value());
}

Rational tilde_length(const Valuation& v, const Mat& g) {
  if (!g.is_uni_upper_triangular()) raise(Errc::not_unipotent_form, "not uni-upper-triangular: " + g.key());
  const Mat inv = g.inverse();
  Rational m(0);
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational weight = pow2(-static_cast<std::int64_t>(j - i - 1));
      for (const Mat* src : {&g, &inv}) {
        const ExtInt e = valuate(v, (*src)(i, j));
        if (e.is_finite()) m = std::min(m, weight * Rational(e.value()));
      }
    }
  }
  return -m;
}

ExtInt pseudometric(const Valuation& v, const Mat& g, const Mat& h) {
  require_special_linear(g);
  require_special_linear(h);
  return length(v, g.inverse() * h);
}

Mat diagonal_coarse(const Valuation& v, const Mat& g) {
  if (!g.is_diagonal()) raise(Errc::not_diagonal, "not diagonal: " + g.key());
  require_special_linear(g);
  const FieldElem pi = uniformizer(v);
  std::vector<FieldElem> diag;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const std::int64_t k = valuate(v, g(i, i)).value();
    FieldElem acc = g.field().one();
    const FieldElem step = k >= 0 ? pi : pi.inverse();
    for (std::int64_t s = 0; s < (k >= 0 ? k : -k); ++s) acc *= step;
    diag.push_back(acc);
  }
  return Mat::diagonal(g.field(), diag);
}

bool check_inequality_lemma(const Rational& a, const Rational& b) {
  const Rational half_b = b / Rational(2);
  const Rational lhs = -std::min({Rational(0), a, half_b});
  const Rational mid = -std::min({Rational(0), a, b});
  const Rational rhs = Rational(-2) * std::min({Rational(0), a, half_b});
  return lhs <= mid && mid <= rhs;
}

}  // namespace valtree
