#include <benchmark/benchmark.h>

#include "valtree/bttree.hpp"
#include "valtree/probe.hpp"
#include "valtree/unipotent.hpp"

using namespace valtree;

namespace {

const Field Q = Field::rationals();

GeneratorSet half_gens() {
  return GeneratorSet::symmetrize(Q, 2,
                                  {Mat::from_literals(Q, {{"1", "1/2"}, {"0", "1"}}),
                                   Mat::from_literals(Q, {{"0", "-1"}, {"1", "0"}})});
}

void BM_RationalArith(benchmark::State& state) {
  Rational a(Integer(355), Integer(113)), b(Integer(-22), Integer(7));
  for (auto _ : state) {
    Rational c = a * b + a / b - b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_RationalArith);

void BM_RatFuncMul(benchmark::State& state) {
  const FieldElem x = parse_literal("(t^3-2*t+1)/(t^2+3)", Field::rational_functions());
  const FieldElem y = parse_literal("(t^2+3)/(t-5)", Field::rational_functions());
  for (auto _ : state) benchmark::DoNotOptimize(x * y + y);
}
BENCHMARK(BM_RatFuncMul);

void BM_WordBall(benchmark::State& state) {
  const GeneratorSet s = half_gens();
  for (auto _ : state) benchmark::DoNotOptimize(word_ball(s, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_WordBall)->Arg(4)->Arg(6)->Arg(8);

void BM_TreeDistance(benchmark::State& state) {
  const Valuation v = Valuation::padic(static_cast<unsigned long>(state.range(0)));
  const Vertex o = base_vertex(2, v);
  std::vector<Vertex> ring{o};
  for (int r = 0; r < 4; ++r) ring = neighbors(ring.back());
  const Vertex far = act(Mat::from_literals(Q, {{"1", "1/8"}, {"0", "1"}}), ring.front());
  for (auto _ : state) benchmark::DoNotOptimize(distance(far, ring.back()));
}
BENCHMARK(BM_TreeDistance)->Arg(2)->Arg(5);

void BM_SmithValuations(benchmark::State& state) {
  const Valuation v = Valuation::padic(2);
  const Mat g = Mat::from_literals(Q, {{"3/4", "5", "1/2"}, {"7", "1/8", "3"}, {"2", "9", "5/16"}});
  for (auto _ : state) benchmark::DoNotOptimize(smith_valuations(g, v));
}
BENCHMARK(BM_SmithValuations);

void BM_IndependenceDeterminant(benchmark::State& state) {
  const MultiPoly t = MultiPoly::variable(0), u = MultiPoly::variable(1);
  std::vector<MultiPoly> ps{MultiPoly(Rational(1)), t, u, t * u};
  ps.resize(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(independence_determinant(ps, 2));
}
BENCHMARK(BM_IndependenceDeterminant)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
