// Acceptance run: one PASS/FAIL line per criterion. With arguments, only the
// listed criteria run.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "valtree/alpsh.hpp"
#include "valtree/length.hpp"
#include "valtree/probe.hpp"
#include "valtree/scenario.hpp"
#include "valtree/tracerep.hpp"
#include "valtree/unipotent.hpp"

using namespace valtree;
using valtree::testing::Gen;

namespace {

const Field Q = Field::rationals();
const Field QT = Field::rational_functions();

struct Outcome {
  bool pass;
  std::string detail;
};

GroupScenario scenario(const std::string& file) { return load_scenario(std::string(VALTREE_SCENARIO_DIR) + "/" + file); }

Rational as_q(ExtInt x) { return Rational(x.value()); }

// Lowest exponent with a nonzero coefficient.
long low_order(const UniPoly& p) {
  long k = 0;
  while (p.coeffs()[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

ExtInt oracle_valuation(const Valuation& v, const FieldElem& x) {
  if (x.is_zero()) return ExtInt::infinity();
  switch (v.kind()) {
    case Valuation::Kind::padic: return testing::naive_padic(x.as_rational(), static_cast<long>(v.prime()));
    case Valuation::Kind::order_at_zero: return low_order(x.as_ratfunc().num()) - low_order(x.as_ratfunc().den());
    case Valuation::Kind::order_at_infinity: return x.as_ratfunc().den().degree() - x.as_ratfunc().num().degree();
    default: return ExtInt::infinity();
  }
}

Outcome valuation_axioms() {
  Gen g(1001);
  const std::vector<Valuation> vs{Valuation::padic(2), Valuation::padic(3), Valuation::padic(5), Valuation::order_at_zero(),
                                  Valuation::order_at_infinity()};
  std::size_t checked = 0, bad = 0;
  for (const auto& v : vs) {
    const Field f = v.natural_field();
    for (int i = 0; i < 10000; ++i) {
      const FieldElem a = g.element(f), b = g.element(f);
      const ExtInt va = valuate(v, a), vb = valuate(v, b);
      if (valuate(v, a * b) != va + vb) ++bad;
      if (valuate(v, a + b) < min(va, vb)) ++bad;
      if (va.is_infinite() != a.is_zero() || vb.is_infinite() != b.is_zero()) ++bad;
      if (va != oracle_valuation(v, a)) ++bad;
      ++checked;
    }
  }
  return {bad == 0, std::to_string(checked) + " pairs over 5 valuations, " + std::to_string(bad) + " violations"};
}

// -min{0,a,b/2} <= -min{0,a,b} <= -2 min{0,a,b/2}, evaluated directly.
bool inequality_oracle(const Rational& a, const Rational& b) {
  const Rational half = b / Rational(2);
  const Rational m_half = std::min({Rational(0), a, half});
  const Rational m = std::min({Rational(0), a, b});
  return -m_half <= -m && -m <= Rational(-2) * m_half;
}

Outcome inequality_lemma() {
  Gen g(1002);
  std::size_t bad = 0, mixed = 0, zeros = 0;
  for (int i = 0; i < 10000; ++i) {
    Rational a = g.rational(), b = g.rational();
    if (i % 10 == 0) a = Rational(0);
    if (i % 10 == 1) b = Rational(0);
    if (i % 10 == 2) a = b = Rational(0);
    if (a.sign() * b.sign() < 0) ++mixed;
    if (a.is_zero() || b.is_zero()) ++zeros;
    if (!check_inequality_lemma(a, b) || !inequality_oracle(a, b)) ++bad;
  }
  return {bad == 0 && mixed > 0 && zeros > 0, "10000 pairs (" + std::to_string(mixed) + " sign-mixed, " +
                                                  std::to_string(zeros) + " with a zero), " + std::to_string(bad) +
                                                  " failures"};
}

Outcome length_suite() {
  Gen g(1003);
  std::size_t bad = 0, pairs = 0;
  const std::vector<Valuation> vs{Valuation::padic(2), Valuation::padic(3), Valuation::order_at_zero()};
  for (const auto& v : vs) {
    const Field f = v.natural_field();
    if (length(v, Mat::identity(f, 2)) != ExtInt(0) || length(v, Mat::identity(f, 3)) != ExtInt(0)) ++bad;
    for (std::size_t n : {2, 3})
      for (int i = 0; i < 1000; ++i) {
        const Mat a = g.sl(f, n), b = g.sl(f, n);
        const ExtInt la = length(v, a), lb = length(v, b);
        if (length(v, a.inverse()) != la) ++bad;
        if (length(v, a * b) > la + lb) ++bad;
        if (la < ExtInt(0)) ++bad;
        ++pairs;
      }
  }
  std::size_t tilde_pairs = 0;
  for (const auto& v : {Valuation::padic(2), Valuation::order_at_zero()}) {
    const Field f = v.natural_field();
    for (int i = 0; i < 1000; ++i) {
      const Mat a = g.unipotent(f, 3), b = g.unipotent(f, 3);
      const Rational ta = tilde_length(v, a), tb = tilde_length(v, b);
      if (tilde_length(v, a * b) > std::max(ta, tb)) ++bad;
      const Rational la = as_q(length(v, a));
      if (!(ta <= la && la <= Rational(2) * ta)) ++bad;
      ++tilde_pairs;
    }
  }
  return {bad == 0, std::to_string(pairs) + " SL(2)/SL(3) pairs, " + std::to_string(tilde_pairs) +
                        " unipotent pairs, " + std::to_string(bad) + " violations"};
}

Outcome tree_metric() {
  std::ostringstream out;
  bool ok = true;
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    const testing::TreeBall t = testing::tree_ball(p, 6);
    Integer expected = 1, layer = p + 1;
    for (int r = 1; r <= 6; ++r, layer *= p) expected += layer;
    if (Integer(static_cast<long>(t.vertices.size())) != expected) ok = false;
    const int nv = static_cast<int>(t.vertices.size());
    const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    std::vector<std::size_t> pair_counts(workers, 0), mismatch_counts(workers, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int i = static_cast<int>(w); i < nv; i += static_cast<int>(workers)) {
          const std::vector<int> d = testing::bfs(t, i);
          for (int j = i; j < nv; ++j) {
            if (distance(t.vertices[static_cast<std::size_t>(i)], t.vertices[static_cast<std::size_t>(j)]) !=
                d[static_cast<std::size_t>(j)])
              ++mismatch_counts[w];
            ++pair_counts[w];
          }
        }
      });
    for (auto& th : pool) th.join();
    std::size_t pairs = 0, mismatches = 0;
    for (unsigned w = 0; w < workers; ++w) {
      pairs += pair_counts[w];
      mismatches += mismatch_counts[w];
    }
    if (mismatches) ok = false;
    out << "p=" << p << ": " << nv << " vertices, " << pairs << " pairs, " << mismatches << " mismatches; ";
  }
  std::string s = out.str();
  s.resize(s.size() - 2);
  return {ok, s};
}

std::size_t count_at(const Profile& p, int R, const Rational& C) {
  for (const auto& r : p.rows)
    if (r.R == R && r.C == C) return r.count;
  return 0;
}

Outcome properness() {
  GroupScenario sc = scenario("sl2-z-half.json");
  sc.sym.enabled = true;
  sc.sym.bound = Rational(100);
  sc.thresholds = {Rational(2)};
  sc.r_min = 6;
  sc.r_max = 8;
  const Profile p = displacement_profile(sc);
  const std::size_t c6 = count_at(p, 6, Rational(2)), c7 = count_at(p, 7, Rational(2)), c8 = count_at(p, 8, Rational(2));
  return {c6 == c7 && c7 == c8,
          "counts at C=2 for R=6,7,8: " + std::to_string(c6) + ", " + std::to_string(c7) + ", " + std::to_string(c8)};
}

bool integer_entries(const Mat& m) {
  for (const auto& e : m.entries()) {
    const FieldElem x = e;
    if (x.kind() == FieldKind::rational) {
      if (x.as_rational().den() != 1) return false;
    } else if (x.kind() == FieldKind::ratfunc) {
      const RatFunc& r = x.as_ratfunc();
      if (r.is_zero()) continue;
      if (!r.is_constant() || (r.num().coeffs()[0] / r.den().coeffs()[0]).den() != 1) return false;
    } else {
      return false;
    }
  }
  return true;
}

Outcome improperness() {
  GroupScenario sc = scenario("laurent-bad.json");
  sc.sym.enabled = false;
  sc.thresholds = {Rational(0)};
  sc.r_min = 2;
  sc.r_max = 8;
  const Profile p = displacement_profile(sc);
  bool ok = true;
  std::ostringstream out;
  std::size_t prev = 0;
  for (int R = 2; R <= 8; ++R) {
    const std::size_t c = count_at(p, R, Rational(0));
    if (c < static_cast<std::size_t>(2 * R + 1)) ok = false;
    if (R > 2 && c <= prev) ok = false;
    prev = c;
    out << c << (R < 8 ? "," : "");
  }
  const auto census = stabilizer_census(sc, 8);
  std::size_t non_integral = 0;
  for (const auto& e : census)
    if (!integer_entries(e.element)) ++non_integral;
  if (non_integral) ok = false;
  return {ok, "counts R=2..8: " + out.str() + "; census " + std::to_string(census.size()) + " elements, " +
                  std::to_string(non_integral) + " with non-integer entries"};
}

Outcome composition_rank() {
  const GeneratorSet e12 = GeneratorSet::symmetrize(
      QT, 2, {Mat::elementary(QT, 2, 0, 1, QT.one()), Mat::elementary(QT, 2, 0, 1, parse_literal("t", QT))}, {"x", "y"});
  const GeneratorSet heis = GeneratorSet::symmetrize(
      Q, 3, {Mat::elementary(Q, 3, 0, 1, Rational(1)), Mat::elementary(Q, 3, 1, 2, Rational(1))}, {"x", "y"});
  const RankBounds a = composition_rank_bounds(e12, 3);
  const RankBounds b = composition_rank_bounds(heis, 4);
  bool ok = a.lower == 2 && a.upper == 2 && b.lower == 2 && b.upper == 2;
  std::size_t words = 0, failures = 0;
  for (const auto* s : {&e12, &heis}) {
    const auto spans = entry_span_upper(*s);
    const WordBall ball = word_ball(*s, 5);
    for (const auto& e : ball.elements()) {
      ++words;
      if (!structure_check(e.element, spans)) ++failures;
    }
  }
  if (failures) ok = false;
  return {ok, "<E12(1),E12(t)> L=3: (" + std::to_string(a.lower) + "," + std::to_string(a.upper) + "); Heisenberg L=4: (" +
                  std::to_string(b.lower) + "," + std::to_string(b.upper) + "); structure check on " +
                  std::to_string(words) + " words, " + std::to_string(failures) + " failures"};
}

MultiPoly random_poly(Gen& g, std::size_t arity) {
  MultiPoly p;
  const int terms = static_cast<int>(g.integer(1, 4));
  for (int i = 0; i < terms; ++i) {
    Monomial m(arity, 0);
    auto budget = static_cast<std::uint32_t>(g.integer(0, 3));
    for (std::size_t k = 0; k < arity && budget > 0; ++k) {
      const auto e = static_cast<std::uint32_t>(g.integer(0, budget));
      m[k] = e;
      budget -= e;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    p += MultiPoly::term(Rational(g.integer(-4, 4)), m);
  }
  return p;
}

Outcome independence() {
  Gen g(1008);
  std::size_t indep_nonzero = 0, dep_zero = 0;
  int indep = 0;
  while (indep < 200) {
    const auto arity = static_cast<std::size_t>(g.integer(1, 2));
    const auto n = static_cast<std::size_t>(g.integer(1, 4));
    std::vector<MultiPoly> ps;
    for (std::size_t k = 0; k < n; ++k) ps.push_back(random_poly(g, arity));
    if (testing::poly_rank(ps) != n) continue;
    ++indep;
    if (!independence_determinant(ps, arity).is_zero()) ++indep_nonzero;
  }
  for (int i = 0; i < 50; ++i) {
    const auto arity = static_cast<std::size_t>(g.integer(1, 2));
    const auto n = static_cast<std::size_t>(g.integer(2, 4));
    std::vector<MultiPoly> ps;
    for (std::size_t k = 0; k + 1 < n; ++k) ps.push_back(random_poly(g, arity));
    MultiPoly combo;
    for (const auto& q : ps) combo += MultiPoly(Rational(g.integer(-3, 3))) * q;
    ps.insert(ps.begin() + static_cast<long>(g.index(n)), combo);
    if (independence_determinant(ps, arity).is_zero()) ++dep_zero;
  }
  return {indep_nonzero == 200 && dep_zero == 50, std::to_string(indep_nonzero) + "/200 independent nonzero, " +
                                                      std::to_string(dep_zero) + "/50 dependent zero"};
}

Outcome trace_rep() {
  const Mat S = Mat::from_literals(Q, {{"0", "-1"}, {"1", "0"}});
  const Mat T = Mat::from_literals(Q, {{"1", "1"}, {"0", "1"}});
  const GeneratorSet s = GeneratorSet::symmetrize(Q, 2, {S, T}, {"S", "T"});
  const TraceBasis tb = burnside_basis(s, 4);
  bool ok = tb.found_at <= 4 && tb.basis.size() == 4;
  Gen g(1009);
  auto word = [&] {
    Mat m = Mat::identity(Q, 2);
    const long len = g.integer(0, 8);
    for (long k = 0; k < len; ++k) m = m * s.gens()[g.index(s.size())];
    return m;
  };
  std::size_t bad = 0, non_rational = 0;
  for (int i = 0; i < 100; ++i) {
    const Mat a = word(), b = word();
    const Mat aa = alpha(a, tb), ab = alpha(b, tb), aab = alpha(a * b, tb);
    if (aab != aa * ab) ++bad;
    for (const auto* m : {&aa, &ab, &aab})
      for (const auto& e : m->entries())
        if (e.kind() != FieldKind::rational) ++non_rational;
  }
  if (bad || non_rational) ok = false;
  return {ok, "basis found at length " + std::to_string(tb.found_at) + "; 100 pairs, " + std::to_string(bad) +
                  " non-multiplicative, " + std::to_string(non_rational) + " non-rational entries"};
}

Outcome alperin_shalen() {
  const std::vector<Valuation> laurent = synthesize_valuations(RingFamily::laurent_z());
  std::size_t swept = 0, counterexamples = 0;
  // Exponents -3..3 and coefficients -5..5: every element with at most two
  // terms, then random elements with any support.
  auto check = [&](const std::vector<long>& c) {
    std::vector<Rational> coeffs;
    for (long x : c) coeffs.emplace_back(x);
    const RatFunc r(UniPoly(coeffs), UniPoly::monomial(Rational(1), 3));
    bool constant_integer = true;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (k != 3 && c[k] != 0) constant_integer = false;
    if (integrality_filter(FieldElem(r), laurent) != constant_integer) ++counterexamples;
    ++swept;
  };
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j)
      for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b) {
          if (i == j && b != 0) continue;
          std::vector<long> c(7, 0);
          c[static_cast<std::size_t>(i)] = a;
          c[static_cast<std::size_t>(j)] += b;
          check(c);
        }
  Gen g(1010);
  for (int i = 0; i < 100000; ++i) {
    std::vector<long> c(7);
    for (auto& x : c) x = g.integer(-5, 5);
    check(c);
  }
  const std::vector<Valuation> z6 = synthesize_valuations(RingFamily::z_inv_s(6));
  std::size_t sampled = 0, z6_bad = 0;
  Integer den = 1;
  for (int k = 0; k <= 4; ++k, den *= 6)
    for (long a = -300; a <= 300; ++a) {
      const Rational x(Integer(a), den);
      const bool is_integer = x.den() == 1;
      if (integrality_filter(x, z6) != is_integer) ++z6_bad;
      ++sampled;
    }
  return {counterexamples == 0 && z6_bad == 0,
          std::to_string(swept) + " Laurent elements, " + std::to_string(counterexamples) + " counterexamples; " +
              std::to_string(sampled) + " Z[1/6] elements, " + std::to_string(z6_bad) + " misclassified"};
}

Rational oracle_distance(const FieldElem& x, const FieldElem& y, const Valuation& v) {
  if (x == y) return Rational(0);
  return pow2(-oracle_valuation(v, x - y).value());
}

Outcome ultrametric() {
  Gen g(1011);
  const std::vector<Valuation> vs{Valuation::padic(2), Valuation::padic(3), Valuation::padic(5), Valuation::order_at_zero(),
                                  Valuation::order_at_infinity()};
  std::size_t sets = 0, bad = 0;
  for (const auto& v : vs) {
    const Field f = v.natural_field();
    for (int i = 0; i < 50; ++i) {
      std::vector<FieldElem> pts;
      const long n = g.integer(1, 16);
      for (long k = 0; k < n; ++k) pts.push_back(g.element(f));
      const Rational d = pow2(g.integer(-4, 4));
      const CoverResult c = ultrametric_cover(pts, v, d);
      std::vector<int> part(pts.size(), -1);
      for (std::size_t q = 0; q < c.parts.size(); ++q)
        for (std::size_t idx : c.parts[q]) part[idx] = static_cast<int>(q);
      bool ok = c.ok();
      for (std::size_t a = 0; a < pts.size(); ++a) {
        if (part[a] < 0) ok = false;
        for (std::size_t b = 0; b < pts.size(); ++b) {
          const bool near = oracle_distance(pts[a], pts[b], v) <= d;
          // Same part exactly when within d: bounded parts, d-separated, and
          // every d-ball meets one part.
          if (near != (part[a] == part[b])) ok = false;
        }
      }
      if (!ok) ++bad;
      ++sets;
    }
  }
  return {bad == 0, std::to_string(sets) + " point sets over 5 valuations, " + std::to_string(bad) + " failed certificates"};
}

Outcome stabilizer_integrality() {
  Gen g(1012);
  std::ostringstream out;
  bool ok = true;
  for (const char* file : {"sl2-z-half.json", "laurent-bad.json", "heisenberg.json"}) {
    const GroupScenario sc = scenario(file);
    std::vector<Vertex> base;
    for (const auto& v : sc.valuations) base.push_back(base_vertex(sc.field, sc.n, v));
    std::size_t stabilizers = 0, counterexamples = 0;
    for (int i = 0; i < 1000; ++i) {
      Mat m = Mat::identity(sc.field, sc.n);
      const long len = g.integer(1, 10);
      for (long k = 0; k < len; ++k) m = m * sc.gens.gens()[g.index(sc.gens.size())];
      bool fixes = true;
      for (const auto& x : base)
        if (displacement(m, x) != 0) fixes = false;
      if (!fixes) continue;
      ++stabilizers;
      if (!isotropy_certificate(m, sc.valuations)) ++counterexamples;
    }
    if (counterexamples || stabilizers == 0) ok = false;
    out << sc.name << ": " << stabilizers << " stabilizers, " << counterexamples << " counterexamples; ";
  }
  std::string s = out.str();
  s.resize(s.size() - 2);
  return {ok, s};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "valuation axioms", valuation_axioms},
      {2, "inequality lemma", inequality_lemma},
      {3, "length functions", length_suite},
      {4, "tree metric vs BFS", tree_metric},
      {5, "properness sl2-z-half", properness},
      {6, "metrical improperness laurent-bad", improperness},
      {7, "composition rank", composition_rank},
      {8, "independence determinant", independence},
      {9, "trace representation", trace_rep},
      {10, "Alperin-Shalen filter", alperin_shalen},
      {11, "ultrametric cover", ultrametric},
      {12, "stabilizers have integral characteristic", stabilizer_integrality},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail << " [" << t.str()
              << "s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
