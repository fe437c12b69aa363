#include "valtree/bttree.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "valtree/error.hpp"

namespace valtree {

namespace {

/// Valuation of a nonzero x, or `cap` if it is at least that.
std::int64_t padic_val(std::int64_t x, std::int64_t p, std::int64_t cap = INT64_MAX) {
  if (p == 2) return std::min<std::int64_t>(std::countr_zero(static_cast<std::uint64_t>(x)), cap);
  std::int64_t k = 0;
  while (k < cap && x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 30;

}  // namespace

Vertex::Vertex(Mat basis, Valuation v) : basis_(std::move(basis)), inverse_(basis_.inverse()), v_(std::move(v)) {
  if (!v_.applies_to(basis_.field().kind()))
    raise(Errc::incompatible_valuation, v_.str() + " does not apply over " + basis_.field().str());
  if (basis_.dim() != 2 || v_.kind() != Valuation::Kind::padic) return;
  Integer den = 1;
  for (const auto& e : basis_.entries()) den = lcm(den, e.as_rational().den());
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational& e = basis_.entries()[i].as_rational();
    const Integer scaled = e.num() * (den / e.den());
    if (abs(scaled) >= kSmallLimit) return;
    int_basis_[i] = scaled.get_si();
  }
  const auto& m = int_basis_;
  det_val_ = padic_val(m[0] * m[3] - m[1] * m[2], static_cast<std::int64_t>(v_.prime()));
  small_ = true;
}

Vertex base_vertex(const Field& field, std::size_t n, const Valuation& v) {
  return Vertex(Mat::identity(field, n), v);
}

Vertex base_vertex(std::size_t n, const Valuation& v) { return base_vertex(v.natural_field(), n, v); }

Vertex act(const Mat& g, const Vertex& x) {
  if (g.dim() != x.dim()) raise(Errc::dimension_mismatch, "acting matrix has the wrong dimension");
  if (!g.is_special_linear()) raise(Errc::not_special_linear, "det != 1 for " + g.key());
  return Vertex(g * x.basis(), x.valuation());
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

ExtInt min_minor_valuation(const Mat& c, const Valuation& v, std::size_t k) {
  ExtInt m = ExtInt::infinity();
  const std::size_t n = c.dim();
  if (k == 1) {
    for (const auto& e : c.entries()) m = min(m, valuate(v, e));
    return m;
  }
  for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
      m = min(m, valuate(v, c.minor(rows, cols).det()));
    });
  });
  return m;
}

}  // namespace

std::vector<std::int64_t> smith_valuations(const Mat& c, const Valuation& v) {
  const std::size_t n = c.dim();
  const FieldElem d = c.det();
  if (d.is_zero()) raise(Errc::singular_matrix, "smith_valuations of a singular matrix");
  std::vector<std::int64_t> out;
  std::int64_t prev = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::int64_t dk = (k == n ? valuate(v, d) : min_minor_valuation(c, v, k)).value();
    out.push_back(dk - prev);
    prev = dk;
  }
  return out;
}

namespace {

void require_compatible(const Vertex& x, const Vertex& y) {
  if (x.dim() != y.dim()) raise(Errc::dimension_mismatch, "vertices of different dimension");
  if (!(x.valuation() == y.valuation())) raise(Errc::incompatible_valuation, "vertices under different valuations");
  if (!(x.basis().field() == y.basis().field())) raise(Errc::incompatible_field, "vertices over different fields");
}

std::int64_t spread(const std::vector<std::int64_t>& s) { return s.back() - s.front(); }

}  // namespace

namespace {

/// Spread of smith(adj(x) y) for integral representatives; equals the spread
/// of x^-1 y since scaling shifts every invariant factor equally.
std::int64_t small_spread(const std::array<std::int64_t, 4>& x, std::int64_t x_det_val,
                          const std::array<std::int64_t, 4>& y, std::int64_t y_det_val, std::int64_t p) {
  const std::array<std::int64_t, 4> prod{x[3] * y[0] - x[1] * y[2], x[3] * y[1] - x[1] * y[3],
                                         -x[2] * y[0] + x[0] * y[2], -x[2] * y[1] + x[0] * y[3]};
  std::int64_t m = INT64_MAX;
  for (std::int64_t e : prod)
    if (e != 0) m = padic_val(e, p, m);
  return x_det_val + y_det_val - 2 * m;
}

}  // namespace

bool same_vertex(const Vertex& x, const Vertex& y) {
  require_compatible(x, y);
  if (x.small_ && y.small_)
    return small_spread(x.int_basis_, x.det_val_, y.int_basis_, y.det_val_,
                        static_cast<std::int64_t>(x.v_.prime())) == 0;
  return spread(smith_valuations(x.basis_inverse() * y.basis(), x.valuation())) == 0;
}

std::int64_t distance(const Vertex& x, const Vertex& y) {
  if (x.dim() != 2) raise(Errc::unsupported_dimension, "tree distance needs n = 2");
  require_compatible(x, y);
  if (x.small_ && y.small_)
    return small_spread(x.int_basis_, x.det_val_, y.int_basis_, y.det_val_, static_cast<std::int64_t>(x.v_.prime()));
  return spread(smith_valuations(x.basis_inverse() * y.basis(), x.valuation()));
}

std::int64_t displacement(const Mat& g, const Vertex& x) {
  if (g.dim() != x.dim()) raise(Errc::dimension_mismatch, "acting matrix has the wrong dimension");
  if (!g.is_special_linear()) raise(Errc::not_special_linear, "det != 1 for " + g.key());
  return spread(smith_valuations(x.basis_inverse() * g * x.basis(), x.valuation()));
}

std::vector<Vertex> neighbors(const Vertex& x) {
  if (x.dim() != 2) raise(Errc::unsupported_dimension, "neighbours are enumerated for n = 2 only");
  if (x.valuation().kind() != Valuation::Kind::padic)
    raise(Errc::infinite_residue_field, "residue field of " + x.valuation().str() + " is infinite");
  const Field& f = x.basis().field();
  const long p = static_cast<long>(x.valuation().prime());
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(p) + 1);
  for (long j = 0; j < p; ++j)
    out.emplace_back(x.basis() * Mat::from_rows(f, {{Rational(p), Rational(j)}, {Rational(0), Rational(1)}}),
                     x.valuation());
  out.emplace_back(x.basis() * Mat::from_rows(f, {{Rational(1), Rational(0)}, {Rational(0), Rational(p)}}),
                   x.valuation());
  return out;
}

Rational sym_displacement(const Mat& g, const std::optional<Rational>& t0) {
  Rational sum(0);
  for (const auto& e : g.entries()) {
    Rational r;
    switch (e.kind()) {
      case FieldKind::rational:
        r = e.as_rational();
        break;
      case FieldKind::ratfunc:
        if (!t0) raise(Errc::needs_evaluation_point, "rational-function entries need an evaluation point");
        r = e.as_ratfunc().eval(*t0);
        break;
      default:
        raise(Errc::incompatible_field, "sym_displacement needs rational or rational-function entries");
    }
    sum = sum + r * r;
  }
  return sum;
}

DisplacementReport displacement_report(const Mat& g, const std::vector<Valuation>& vs, bool with_sym,
                                       const std::optional<Rational>& t0) {
  DisplacementReport rep;
  rep.total = Rational(0);
  for (const auto& v : vs) {
    const std::int64_t d = displacement(g, base_vertex(g.field(), g.dim(), v));
    rep.tree_displacements.push_back(d);
    rep.total = rep.total + Rational(d);
  }
  if (with_sym) {
    rep.sym_proxy = sym_displacement(g, t0);
    rep.total = rep.total + *rep.sym_proxy;
  }
  return rep;
}

}  // namespace valtree
