#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "valtree/alpsh.hpp"
#include "valtree/bttree.hpp"
#include "valtree/word_ball.hpp"

namespace valtree {

struct SymProxy {
  bool enabled = false;
  Rational bound{100};
  Rational t0{3, 2};
};

struct CoverSpec {
  std::vector<FieldElem> points;
  std::optional<Valuation> valuation;
  Rational d{1};
};

/// A named group with everything the probes need.
struct GroupScenario {
  std::string name;
  Field field = Field::rationals();
  std::size_t n = 2;
  GeneratorSet gens = GeneratorSet::symmetrize(Field::rationals(), 2, {});
  std::optional<RingFamily> ring;
  std::vector<Valuation> valuations;
  SymProxy sym;
  std::vector<Rational> thresholds;
  int r_min = 0;
  int r_max = 0;
  std::size_t element_cap = kDefaultBallCap;

  int rank_length = 4;
  int trace_word_len = 4;
  int census_radius = -1;  // r_max when negative
  std::vector<FieldElem> elements;
  std::optional<CoverSpec> cover;
  std::optional<Mat> conjugator;
};

struct ProfileRow {
  int R;
  Rational C;
  std::size_t count;
  Rational min_disp;
  Rational max_disp;
};

struct Profile {
  std::vector<ProfileRow> rows;
  /// Per threshold: count unchanged over the three largest radii.
  std::vector<bool> stable;
  std::size_t ball_size = 0;
};

/// Per-element displacement at every base vertex plus the proxy when enabled.
/// Evaluated over `threads` workers; the result does not depend on it.
std::vector<DisplacementReport> displacement_reports(const GroupScenario& sc, const WordBall& ball,
                                                     unsigned threads = 1);

/// Counts of ball elements whose every tree displacement is <= C (and proxy
/// <= its bound when enabled), for each radius and threshold.
Profile displacement_profile(const GroupScenario& sc, unsigned threads = 1);

/// Ball elements fixing every base vertex.
std::vector<BallElement> stabilizer_census(const GroupScenario& sc, int R, unsigned threads = 1);

struct CoverResult {
  std::vector<std::vector<std::size_t>> parts;  // indices into the input
  bool diameter_ok = false;
  bool separated_ok = false;
  bool multiplicity_ok = false;
  bool ok() const { return diameter_ok && separated_ok && multiplicity_ok; }
};

/// dist(x, y) = 2^-nu(x - y); zero when x = y.
Rational ultrametric_distance(const FieldElem& x, const FieldElem& y, const Valuation& v);

/// Greedy partition into closed d-balls with its certificate.
CoverResult ultrametric_cover(const std::vector<FieldElem>& points, const Valuation& v, const Rational& d);

}  // namespace valtree
