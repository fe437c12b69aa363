#include "valtree/probe.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "valtree/error.hpp"

namespace valtree {

namespace {

template <typename F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += threads) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<DisplacementReport> displacement_reports(const GroupScenario& sc, const WordBall& ball,
                                                     unsigned threads) {
  std::vector<Vertex> bases;
  for (const auto& v : sc.valuations) bases.push_back(base_vertex(sc.field, sc.n, v));
  const auto& elems = ball.elements();
  std::vector<DisplacementReport> out(elems.size());
  parallel_for(elems.size(), threads, [&](std::size_t i) {
    DisplacementReport rep;
    rep.total = Rational(0);
    for (const auto& b : bases) {
      const std::int64_t d = displacement(elems[i].element, b);
      rep.tree_displacements.push_back(d);
      rep.total += Rational(d);
    }
    if (sc.sym.enabled) {
      rep.sym_proxy = sym_displacement(elems[i].element, sc.sym.t0);
      rep.total += *rep.sym_proxy;
    }
    out[i] = std::move(rep);
  });
  return out;
}

Profile displacement_profile(const GroupScenario& sc, unsigned threads) {
  if (sc.r_min < 0 || sc.r_max < sc.r_min) raise(Errc::invalid_argument, "radius range must satisfy 0 <= min <= max");
  const WordBall ball = word_ball(sc.gens, sc.r_max, sc.element_cap);
  const auto reps = displacement_reports(sc, ball, threads);
  const auto& elems = ball.elements();

  Profile prof;
  prof.ball_size = ball.size();
  std::vector<std::vector<std::size_t>> counts(sc.thresholds.size());
  for (int R = sc.r_min; R <= sc.r_max; ++R) {
    std::optional<Rational> lo, hi;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i].length > R) continue;
      if (!lo || reps[i].total < *lo) lo = reps[i].total;
      if (!hi || reps[i].total > *hi) hi = reps[i].total;
    }
    for (std::size_t c = 0; c < sc.thresholds.size(); ++c) {
      const Rational& C = sc.thresholds[c];
      std::size_t count = 0;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].length > R) continue;
        const auto& t = reps[i].tree_displacements;
        if (!std::all_of(t.begin(), t.end(), [&](std::int64_t d) { return Rational(d) <= C; })) continue;
        if (sc.sym.enabled && *reps[i].sym_proxy > sc.sym.bound) continue;
        ++count;
      }
      counts[c].push_back(count);
      prof.rows.push_back({R, C, count, *lo, *hi});
    }
  }
  for (const auto& cs : counts)
    prof.stable.push_back(cs.size() >= 3 && cs[cs.size() - 1] == cs[cs.size() - 2] &&
                          cs[cs.size() - 2] == cs[cs.size() - 3]);
  return prof;
}

std::vector<BallElement> stabilizer_census(const GroupScenario& sc, int R, unsigned threads) {
  const WordBall ball = word_ball(sc.gens, R, sc.element_cap);
  GroupScenario trees_only = sc;
  trees_only.sym.enabled = false;
  const auto reps = displacement_reports(trees_only, ball, threads);
  std::vector<BallElement> out;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto& t = reps[i].tree_displacements;
    if (std::all_of(t.begin(), t.end(), [](std::int64_t d) { return d == 0; })) out.push_back(ball.elements()[i]);
  }
  return out;
}

Rational ultrametric_distance(const FieldElem& x, const FieldElem& y, const Valuation& v) {
  const ExtInt e = valuate(v, x - y);
  return e.is_finite() ? pow2(-e.value()) : Rational(0);
}

CoverResult ultrametric_cover(const std::vector<FieldElem>& points, const Valuation& v, const Rational& d) {
  if (d.sign() <= 0) raise(Errc::invalid_argument, "scale d must be positive");
  const std::size_t m = points.size();
  std::vector<std::vector<Rational>> dist(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) dist[i][j] = dist[j][i] = ultrametric_distance(points[i], points[j], v);

  CoverResult res;
  std::vector<std::size_t> part_of(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (part_of[i] != m) continue;
    std::vector<std::size_t> part;
    for (std::size_t j = i; j < m; ++j)
      if (part_of[j] == m && dist[i][j] <= d) {
        part_of[j] = res.parts.size();
        part.push_back(j);
      }
    res.parts.push_back(std::move(part));
  }

  res.diameter_ok = true;
  res.separated_ok = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (part_of[i] == part_of[j] && dist[i][j] > d) res.diameter_ok = false;
      if (part_of[i] != part_of[j] && dist[i][j] <= d) res.separated_ok = false;
    }
  res.multiplicity_ok = true;
  for (std::size_t i = 0; i < m; ++i) {
    std::set<std::size_t> met;
    for (std::size_t j = 0; j < m; ++j)
      if (dist[i][j] <= d) met.insert(part_of[j]);
    if (met.size() != 1) res.multiplicity_ok = false;
  }
  return res;
}

}  // namespace valtree
