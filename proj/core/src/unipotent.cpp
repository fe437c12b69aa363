#include "valtree/unipotent.hpp"

#include <algorithm>
#include <set>

#include "valtree/error.hpp"

namespace valtree {

namespace {

/// Incremental row echelon form over Q.
class RowReducer {
 public:
  /// Returns true when the row is independent of those already added.
  bool add(std::vector<Rational> row) {
    for (const auto& [pivot, r] : rows_) {
      if (pivot < row.size() && !row[pivot].is_zero()) {
        const Rational f = row[pivot];
        for (std::size_t c = pivot; c < row.size(); ++c) row[c] -= f * r[c];
      }
    }
    auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return !x.is_zero(); });
    if (it == row.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - row.begin());
    const Rational inv = row[pivot].inverse();
    for (std::size_t c = pivot; c < row.size(); ++c) row[c] *= inv;
    // Keep earlier rows reduced against the new pivot so add() stays one pass.
    for (auto& [p, r] : rows_) {
      if (!r[pivot].is_zero()) {
        const Rational f = r[pivot];
        for (std::size_t c = pivot; c < r.size(); ++c) r[c] -= f * row[c];
      }
    }
    rows_.emplace_back(pivot, std::move(row));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  return UniPoly::divmod(a * b, UniPoly::gcd(a, b)).first.monic();
}

/// Maps elements of one family to Q-coordinate vectors by a single injective
/// Q-linear map, so that ranks are preserved.
class Coordinates {
 public:
  explicit Coordinates(const std::vector<FieldElem>& all) {
    for (const auto& e : all) {
      if (e.kind() == FieldKind::rational) continue;
      if (family_ == FieldKind::rational) {
        family_ = e.kind();
        if (e.kind() == FieldKind::algebraic) nf_ = e.as_algebraic().field();
      } else if (family_ != e.kind()) {
        raise(Errc::mixed_families, "elements from different field families");
      } else if (family_ == FieldKind::algebraic && !same_number_field(nf_, e.as_algebraic().field())) {
        raise(Errc::mixed_families, "elements from different number fields");
      }
    }
    switch (family_) {
      case FieldKind::rational:
        width_ = 1;
        break;
      case FieldKind::ratfunc: {
        den_ = UniPoly(Rational(1));
        for (const auto& e : all)
          if (e.kind() == FieldKind::ratfunc) den_ = lcm(den_, e.as_ratfunc().den());
        int deg = 0;
        for (const auto& e : all) deg = std::max(deg, cleared(e).degree());
        width_ = static_cast<std::size_t>(deg) + 1;
        break;
      }
      case FieldKind::algebraic:
        width_ = nf_->degree();
        break;
      case FieldKind::multipoly: {
        std::set<Monomial> ms{Monomial{}};
        for (const auto& e : all)
          if (e.kind() == FieldKind::multipoly)
            for (const auto& [m, c] : e.as_multipoly().terms()) ms.insert(m);
        std::size_t i = 0;
        for (const auto& m : ms) index_.emplace(m, i++);
        width_ = index_.size();
        break;
      }
    }
  }

  std::size_t width() const { return width_; }

  void append(const FieldElem& e, std::vector<Rational>& out) const {
    const std::size_t base = out.size();
    out.resize(base + width_, Rational(0));
    if (e.is_zero()) return;
    switch (family_) {
      case FieldKind::rational:
        out[base] = e.as_rational();
        return;
      case FieldKind::ratfunc: {
        const UniPoly p = cleared(e);
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[base + k] = p.coeffs()[k];
        return;
      }
      case FieldKind::algebraic:
        if (e.kind() == FieldKind::rational) {
          out[base] = e.as_rational();
        } else {
          const auto& c = e.as_algebraic().coords();
          for (std::size_t k = 0; k < c.size(); ++k) out[base + k] = c[k];
        }
        return;
      case FieldKind::multipoly:
        if (e.kind() == FieldKind::rational) {
          out[base + index_.at(Monomial{})] = e.as_rational();
        } else {
          for (const auto& [m, c] : e.as_multipoly().terms()) out[base + index_.at(m)] = c;
        }
        return;
    }
  }

 private:
  UniPoly cleared(const FieldElem& e) const {
    if (e.kind() == FieldKind::rational) return den_ * e.as_rational();
    const RatFunc& r = e.as_ratfunc();
    return r.num() * UniPoly::divmod(den_, r.den()).first;
  }

  FieldKind family_ = FieldKind::rational;
  NumberFieldPtr nf_;
  UniPoly den_;
  std::map<Monomial, std::size_t> index_;
  std::size_t width_ = 0;
};

std::vector<FieldElem> flatten(const std::vector<std::vector<FieldElem>>& tuples) {
  std::vector<FieldElem> all;
  for (const auto& t : tuples) all.insert(all.end(), t.begin(), t.end());
  return all;
}

void require_unipotent(const GeneratorSet& s) {
  for (const auto& g : s.gens())
    if (!g.is_uni_upper_triangular()) raise(Errc::not_unipotent_form, "generator not uni-upper-triangular: " + g.key());
}

bool in_layer_domain(const Mat& g, std::size_t k) {
  for (std::size_t d = 1; d < k; ++d)
    for (std::size_t i = 0; i + d < g.dim(); ++i)
      if (!g(i, i + d).is_zero()) return false;
  return true;
}

std::vector<EntrySpan> position_bases(const LayerMap& layer, const std::vector<std::vector<FieldElem>>& tuples) {
  std::vector<EntrySpan> out;
  for (std::size_t p = 0; p < layer.positions.size(); ++p) {
    std::vector<FieldElem> col;
    for (const auto& t : tuples) col.push_back(t[p]);
    out.push_back({layer.positions[p], q_basis(col)});
  }
  return out;
}

/// Rank after each word length 0..L for the tuples of one layer.
std::vector<std::size_t> rank_by_length(const WordBall& ball, const LayerMap& layer,
                                        std::vector<std::vector<FieldElem>>& tuples) {
  std::vector<const BallElement*> members;
  for (const auto& e : ball.elements())
    if (in_layer_domain(e.element, layer.k)) members.push_back(&e);
  std::stable_sort(members.begin(), members.end(),
                   [](const BallElement* a, const BallElement* b) { return a->length < b->length; });
  tuples.clear();
  for (const auto* m : members) {
    std::vector<FieldElem> t;
    for (const auto& [i, j] : layer.positions) t.push_back(m->element(i, j));
    tuples.push_back(std::move(t));
  }
  const Coordinates coords(flatten(tuples));
  RowReducer rr;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(ball.radius()) + 1, 0);
  std::size_t idx = 0;
  for (int len = 0; len <= ball.radius(); ++len) {
    for (; idx < members.size() && members[idx]->length == len; ++idx) {
      std::vector<Rational> row;
      for (const auto& x : tuples[idx]) coords.append(x, row);
      rr.add(std::move(row));
    }
    ranks[static_cast<std::size_t>(len)] = rr.rank();
  }
  return ranks;
}

}  // namespace

std::size_t q_rank_tuples(const std::vector<std::vector<FieldElem>>& tuples) {
  const Coordinates coords(flatten(tuples));
  RowReducer rr;
  for (const auto& t : tuples) {
    std::vector<Rational> row;
    for (const auto& x : t) coords.append(x, row);
    rr.add(std::move(row));
  }
  return rr.rank();
}

std::size_t q_rank(const std::vector<FieldElem>& elems) {
  std::vector<std::vector<FieldElem>> tuples;
  for (const auto& e : elems) tuples.push_back({e});
  return q_rank_tuples(tuples);
}

std::vector<FieldElem> q_basis(const std::vector<FieldElem>& elems) {
  const Coordinates coords(elems);
  RowReducer rr;
  std::vector<FieldElem> out;
  for (const auto& e : elems) {
    std::vector<Rational> row;
    coords.append(e, row);
    if (rr.add(std::move(row))) out.push_back(e);
  }
  return out;
}

std::vector<LayerMap> layer_decompose(std::size_t n) {
  if (n < 2) raise(Errc::invalid_argument, "layers need n >= 2");
  std::vector<LayerMap> out;
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    LayerMap l{k, false, {}};
    for (std::size_t i = 0; i + k < n; ++i) l.positions.emplace_back(i, i + k);
    out.push_back(std::move(l));
  }
  out.push_back({n - 1, true, {{0, n - 1}}});
  return out;
}

LayerLower entry_span_lower(const WordBall& ball, std::size_t n, const LayerMap& layer) {
  (void)n;
  std::vector<std::vector<FieldElem>> tuples;
  const auto ranks = rank_by_length(ball, layer, tuples);
  return {layer, ranks.back(), position_bases(layer, tuples), tuples.size()};
}

LayerLower entry_span_lower(const GeneratorSet& s, const LayerMap& layer, int L) {
  require_unipotent(s);
  return entry_span_lower(word_ball(s, L), s.dim(), layer);
}

std::map<Position, EntrySpan> entry_span_upper(const GeneratorSet& s) {
  require_unipotent(s);
  const std::size_t n = s.dim();
  std::map<Position, EntrySpan> spans;
  for (std::size_t d = 1; d < n; ++d) {
    for (std::size_t i = 0; i + d < n; ++i) {
      const std::size_t j = i + d;
      std::vector<FieldElem> gens;
      for (const auto& g : s.gens())
        if (!g(i, j).is_zero()) gens.push_back(g(i, j));
      for (std::size_t l = i + 1; l < j; ++l)
        for (const auto& a : spans.at({i, l}).basis)
          for (const auto& b : spans.at({l, j}).basis) gens.push_back(a * b);
      spans[{i, j}] = EntrySpan{{i, j}, q_basis(gens)};
    }
  }
  return spans;
}

RankBounds composition_rank_bounds(const GeneratorSet& s, int L, std::size_t cap) {
  require_unipotent(s);
  const std::size_t n = s.dim();
  const WordBall ball = word_ball(s, L, cap);
  const auto upper = entry_span_upper(s);
  RankBounds rb;
  std::vector<std::vector<std::size_t>> history;
  for (const auto& layer : layer_decompose(n)) {
    std::vector<std::vector<FieldElem>> tuples;
    history.push_back(rank_by_length(ball, layer, tuples));
    LayerBounds lb{layer, history.back().back(), 0, position_bases(layer, tuples), {}};
    for (const auto& p : layer.positions) {
      lb.upper += upper.at(p).basis.size();
      lb.upper_spans.push_back(upper.at(p));
    }
    if (lb.lower > lb.upper)
      raise(Errc::invariant_violation, "lower rank exceeds upper rank on layer " + std::to_string(layer.k));
    rb.lower = std::max(rb.lower, lb.lower);
    rb.upper = std::max(rb.upper, lb.upper);
    rb.per_layer.push_back(std::move(lb));
  }
  rb.saturation_length = L;
  for (int len = L; len >= 0; --len) {
    const bool same = std::all_of(history.begin(), history.end(), [&](const std::vector<std::size_t>& h) {
      return h[static_cast<std::size_t>(len)] == h.back();
    });
    if (!same) break;
    rb.saturation_length = len;
  }
  return rb;
}

bool structure_check(const Mat& g, const std::map<Position, EntrySpan>& spans) {
  if (!g.is_uni_upper_triangular()) raise(Errc::not_unipotent_form, "not uni-upper-triangular: " + g.key());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const FieldElem& x = g(i, j);
      if (x.is_zero()) continue;
      auto it = spans.find({i, j});
      if (it == spans.end()) return false;
      std::vector<FieldElem> ext = it->second.basis;
      ext.push_back(x);
      if (q_rank(ext) != it->second.basis.size()) return false;
    }
  }
  return true;
}

MultiPoly independence_determinant(const std::vector<MultiPoly>& polys, std::size_t arity) {
  for (const auto& p : polys)
    if (p.arity() > arity) raise(Errc::invalid_argument, "polynomial uses more than " + std::to_string(arity) + " variables");
  const std::size_t n = polys.size();
  if (n == 0) return MultiPoly(Rational(1));
  const Field f = Field::polynomials();
  std::vector<FieldElem> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries.emplace_back(polys[j].shift_variables(i * arity));
  return det_by_expansion(Mat(f, n, std::move(entries))).as_multipoly();
}

namespace {

MultiPoly to_multipoly(const UniPoly& p) {
  MultiPoly out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    out += MultiPoly::term(p.coeffs()[k], Monomial{static_cast<std::uint32_t>(k)});
  return out;
}

/// Candidate parameters 0, 1, -1, 2, -2, ...
Rational candidate(std::size_t i) {
  const long h = static_cast<long>((i + 1) / 2);
  return Rational(i % 2 == 1 ? h : -h);
}

}  // namespace

BoundednessWitness boundedness_witness(const EntrySpan& span, const Rational& bound) {
  const auto& u = span.basis;
  const std::size_t m = u.size();
  if (m == 0) raise(Errc::degenerate_span, "empty span");
  if (bound.sign() <= 0) raise(Errc::invalid_argument, "bound must be positive");
  if (q_rank(u) != m) raise(Errc::degenerate_span, "span basis is linearly dependent over Q");

  FieldKind family = FieldKind::rational;
  for (const auto& e : u) {
    if (e.kind() == FieldKind::algebraic) raise(Errc::incompatible_field, "number field spans have no witness");
    if (e.kind() != FieldKind::rational) family = e.kind();
  }

  // Multivariate spans are restricted to the curve t_k = tau^((D+1)^k),
  // which keeps distinct monomials of degree <= D distinct.
  std::size_t arity = 1;
  std::vector<std::size_t> kron{1};
  if (family == FieldKind::multipoly) {
    std::size_t deg = 0;
    arity = 1;
    for (const auto& e : u)
      if (e.kind() == FieldKind::multipoly) {
        deg = std::max(deg, e.as_multipoly().total_degree());
        arity = std::max(arity, e.as_multipoly().arity());
      }
    kron.assign(arity, 1);
    for (std::size_t k = 1; k < arity; ++k) kron[k] = kron[k - 1] * (deg + 1);
  }
  auto point_of = [&](const Rational& tau) {
    std::vector<Rational> pt;
    for (std::size_t k = 0; k < arity; ++k) pt.push_back(pow(tau, static_cast<std::int64_t>(kron[k])));
    return pt;
  };
  auto value = [&](const FieldElem& e, const Rational& tau) -> Rational {
    switch (e.kind()) {
      case FieldKind::rational:
        return e.as_rational();
      case FieldKind::ratfunc:
        return e.as_ratfunc().eval(tau);
      default:
        return e.as_multipoly().eval(point_of(tau));
    }
  };

  BoundednessWitness w{{}, Mat::identity(Field::rationals(), 1), Mat::identity(Field::rationals(), 1), Rational(0),
                       false, Rational(0)};
  RowReducer rr;
  std::vector<std::vector<FieldElem>> rows;
  for (std::size_t i = 0; rows.size() < m && i < 4096; ++i) {
    const Rational tau = candidate(i);
    std::vector<Rational> row;
    try {
      for (const auto& e : u) row.push_back(value(e, tau));
    } catch (const Error& err) {
      if (err.code() == Errc::needs_evaluation_point) continue;
      throw;
    }
    if (!rr.add(row)) continue;
    w.points.push_back(tau);
    rows.emplace_back(row.begin(), row.end());
  }
  if (rows.size() < m) raise(Errc::degenerate_span, "no invertible evaluation system found");

  const Field q = Field::rationals();
  w.system = Mat::from_rows(q, rows);
  w.inverse = w.system.inverse();
  w.determinant = w.system.det().as_rational();

  if (family == FieldKind::multipoly) {
    std::vector<MultiPoly> polys;
    for (const auto& e : u)
      polys.push_back(e.kind() == FieldKind::multipoly ? e.as_multipoly() : MultiPoly(e.as_rational()));
    std::vector<Rational> pt;
    for (const auto& tau : w.points) {
      const auto block = point_of(tau);
      pt.insert(pt.end(), block.begin(), block.end());
    }
    w.determinant_consistent = independence_determinant(polys, arity).eval(pt) == w.determinant;
  } else {
    UniPoly den(Rational(1));
    for (const auto& e : u)
      if (e.kind() == FieldKind::ratfunc) den = lcm(den, e.as_ratfunc().den());
    std::vector<MultiPoly> polys;
    for (const auto& e : u) {
      const UniPoly num = e.kind() == FieldKind::ratfunc
                              ? e.as_ratfunc().num() * UniPoly::divmod(den, e.as_ratfunc().den()).first
                              : den * e.as_rational();
      polys.push_back(to_multipoly(num));
    }
    Rational scale(1);
    for (const auto& tau : w.points) scale *= den.eval(tau);
    w.determinant_consistent = independence_determinant(polys, 1).eval(w.points) == w.determinant * scale;
  }

  Rational worst(0);
  for (std::size_t j = 0; j < m; ++j) {
    Rational row_sum(0);
    for (std::size_t i = 0; i < m; ++i) row_sum += w.inverse(j, i).as_rational().abs();
    worst = std::max(worst, row_sum);
  }
  w.box_bound = bound * worst;
  return w;
}

}  // namespace valtree
