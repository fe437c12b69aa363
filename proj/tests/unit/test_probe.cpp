#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "valtree/probe.hpp"
#include "valtree/scenario.hpp"

using namespace valtree;
using valtree::testing::Gen;

namespace {

const Field Q = Field::rationals();
const Field QT = Field::rational_functions();

GroupScenario laurent_bad(int rmax) {
  GroupScenario sc;
  sc.name = "laurent-bad";
  sc.field = QT;
  sc.gens = GeneratorSet::symmetrize(
      QT, 2, {Mat::from_literals(QT, {{"t", "0"}, {"0", "t^-1"}}), Mat::from_literals(QT, {{"1", "1"}, {"0", "1"}})},
      {"a", "b"});
  sc.ring = RingFamily::laurent_z();
  sc.valuations = synthesize_valuations(*sc.ring);
  sc.thresholds = {Rational(0), Rational(1), Rational(2)};
  sc.r_min = 0;
  sc.r_max = rmax;
  return sc;
}

GroupScenario sl2_half(int rmax) {
  GroupScenario sc;
  sc.name = "sl2-z-half";
  sc.gens = GeneratorSet::symmetrize(Q, 2,
                                     {Mat::elementary(Q, 2, 0, 1, Rational(1, 2)),
                                      Mat::from_rows(Q, {{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}})});
  sc.ring = RingFamily::z_inv_s(2);
  sc.valuations = synthesize_valuations(*sc.ring);
  sc.sym.enabled = true;
  sc.thresholds = {Rational(0), Rational(2), Rational(4)};
  sc.r_max = rmax;
  return sc;
}

}  // namespace

TEST_CASE("trivial group profile") {
  GroupScenario sc;
  sc.gens = GeneratorSet::symmetrize(Q, 2, {});
  sc.valuations = {Valuation::padic(3)};
  sc.thresholds = {Rational(0), Rational(5)};
  sc.r_max = 4;
  const Profile p = displacement_profile(sc);
  CHECK(p.rows.size() == 10);
  for (const auto& r : p.rows) CHECK(r.count == 1);
  CHECK(stabilizer_census(sc, 4).size() == 1);
  CHECK(p.stable[0]);
}

TEST_CASE("profile counts are monotone and thread-independent") {
  for (const auto& sc : {laurent_bad(5), sl2_half(5)}) {
    const Profile p = displacement_profile(sc, 1);
    const Profile p3 = displacement_profile(sc, 3);
    REQUIRE(p.rows.size() == p3.rows.size());
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
      CHECK(p.rows[i].count == p3.rows[i].count);
      CHECK(p.rows[i].min_disp == p3.rows[i].min_disp);
      CHECK(p.rows[i].max_disp == p3.rows[i].max_disp);
    }
    const std::size_t nc = sc.thresholds.size();
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
      if (i % nc != 0) CHECK(p.rows[i].count >= p.rows[i - 1].count);
      if (i >= nc) CHECK(p.rows[i].count >= p.rows[i - nc].count);
    }
  }
}

TEST_CASE("metrically improper Laurent group") {
  const GroupScenario sc = laurent_bad(6);
  const Profile p = displacement_profile(sc);
  std::size_t prev = 0;
  for (const auto& r : p.rows) {
    if (r.C != Rational(0)) continue;
    CHECK(r.count >= static_cast<std::size_t>(2 * r.R + 1));
    if (r.R > 0) CHECK(r.count > prev);
    prev = r.count;
  }
}

TEST_CASE("stabiliser census") {
  const GroupScenario sc = laurent_bad(4);
  const auto st = stabilizer_census(sc, 4);
  std::set<std::string> keys;
  for (const auto& e : st) {
    keys.insert(e.key);
    CHECK(isotropy_certificate(e.element, sc.valuations));
    for (const auto& x : e.element.entries()) {
      REQUIRE(x.kind() == FieldKind::ratfunc);
      CHECK(x.as_ratfunc().is_constant());
      CHECK(x.as_ratfunc().num().has_integer_coeffs());
    }
  }
  // Pure b-words: exactly the powers b^k with |k| <= 4.
  for (long k = -4; k <= 4; ++k) CHECK(keys.count(Mat::elementary(QT, 2, 0, 1, Rational(k)).key()) == 1);
  std::size_t pure = 0;
  for (const auto& e : st)
    if (e.element(0, 0).is_one() && e.element(1, 1).is_one() && e.element(1, 0).is_zero()) ++pure;
  CHECK(pure == 9);

  // Census members are counted at C = 0 with the proxy disabled.
  const Profile p = displacement_profile(sc);
  for (const auto& r : p.rows)
    if (r.R == 4 && r.C == Rational(0)) CHECK(r.count >= st.size());

  const GroupScenario half = sl2_half(4);
  for (const auto& e : stabilizer_census(half, 4)) CHECK(isotropy_certificate(e.element, half.valuations));
}

TEST_CASE("ultrametric covers") {
  const Valuation v2 = Valuation::padic(2);
  std::vector<FieldElem> pts{Rational(0), Rational(1), Rational(2), Rational(3)};
  const CoverResult c = ultrametric_cover(pts, v2, Rational(1, 2));
  REQUIRE(c.parts.size() == 2);
  CHECK(c.parts[0] == std::vector<std::size_t>{0, 2});
  CHECK(c.parts[1] == std::vector<std::size_t>{1, 3});
  CHECK(c.ok());
  CHECK(ultrametric_distance(pts[0], pts[2], v2) == Rational(1, 2));
  CHECK(ultrametric_distance(pts[0], pts[1], v2) == Rational(1));
  CHECK(ultrametric_cover({FieldElem(Rational(5))}, v2, Rational(1)).parts.size() == 1);
  CHECK(ultrametric_cover(pts, v2, Rational(1)).parts.size() == 1);

  Gen g(71);
  for (int i = 0; i < 200; ++i) {
    const FieldElem x = g.rational(), y = g.rational(), z = g.rational();
    CHECK(ultrametric_distance(x, z, v2) <= std::max(ultrametric_distance(x, y, v2), ultrametric_distance(y, z, v2)));
  }
  for (int i = 0; i < 20; ++i) {
    std::vector<FieldElem> ps;
    for (int k = 0; k < 12; ++k) ps.push_back(g.ratfunc());
    const CoverResult r = ultrametric_cover(ps, Valuation::order_at_zero(), pow2(-g.integer(-3, 3)));
    CHECK(r.ok());
  }
}

TEST_CASE("profile CSV layout") {
  const GroupScenario sc = laurent_bad(2);
  const std::string csv = profile_csv(displacement_profile(sc));
  CHECK(csv.rfind("R,C,count,min_disp,max_disp\n", 0) == 0);
  CHECK(csv.find("\n0,0,1,0,0\n") != std::string::npos);
}
