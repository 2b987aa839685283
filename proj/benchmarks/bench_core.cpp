#include <benchmark/benchmark.h>

#include "toric/bratteli.hpp"
#include "toric/lattice.hpp"
#include "toric/representation.hpp"

using namespace toric;

namespace {

ScalarVector tribonacci() {
  FieldPtr f = NumberField::make(Poly({Rational(-1), Rational(-1), Rational(-1), Rational(1)}),
                                 RationalInterval{Rational(1), Rational(2)});
  FieldElement l = FieldElement::generator(f);
  return {Scalar(1), Scalar(l * l - l), Scalar(l)};
}

ScalarVector cube_roots() {
  FieldPtr f = NumberField::make(Poly({Rational(-2), Rational(0), Rational(0), Rational(1)}),
                                 RationalInterval{Rational(1), Rational(2)});
  FieldElement a = FieldElement::generator(f);
  return {Scalar(1), Scalar(a), Scalar(a * a)};
}

ScalarVector rational_vector(std::size_t n) {
  ScalarVector v{Scalar(1)};
  for (std::size_t i = 1; i < n; ++i) v.emplace_back(Rational(Integer(1000003 * i + 17), Integer(999983)));
  return v;
}

}  // namespace

static void BM_RationalExpand(benchmark::State& state) {
  const auto theta = rational_vector(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jpa_expand(theta, 200));
}
BENCHMARK(BM_RationalExpand)->Arg(2)->Arg(4)->Arg(6);

static void BM_AlgebraicExpand(benchmark::State& state) {
  const auto theta = cube_roots();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jpa_expand(theta, depth));
}
BENCHMARK(BM_AlgebraicExpand)->Arg(10)->Arg(20)->Arg(40);

static void BM_DetectPeriodTribonacci(benchmark::State& state) {
  const auto theta = tribonacci();
  for (auto _ : state) benchmark::DoNotOptimize(detect_period(theta, 8, 8));
}
BENCHMARK(BM_DetectPeriodTribonacci);

static void BM_Convergent(benchmark::State& state) {
  const auto exp = jpa_expand(tribonacci(), 25);
  for (auto _ : state) benchmark::DoNotOptimize(convergent(exp, 25));
}
BENCHMARK(BM_Convergent);

static void BM_TailEquivalent(benchmark::State& state) {
  const auto a = JpaExpansion::periodic(4, {}, 0, {{1, 0, 2}, {0, 1, 1}, {2, 2, 1}});
  const auto b = a.suffix(2).with_prefix(std::vector<DigitVector>{{3, 3, 3}, {1, 1, 1}, {0, 0, 4}});
  for (auto _ : state) benchmark::DoNotOptimize(tail_equivalent(a, b));
}
BENCHMARK(BM_TailEquivalent);

static void BM_BuildDiagram(benchmark::State& state) {
  const auto exp = jpa_expand(rational_vector(6), 64);
  for (auto _ : state) benchmark::DoNotOptimize(export_dot(build_diagram(exp)));
}
BENCHMARK(BM_BuildDiagram);

static void BM_PlIsomorphic(benchmark::State& state) {
  const auto pl = PseudoLattice::from_scalars(rational_vector(5));
  IntMatrix t = IntMatrix::identity(5);
  for (std::size_t i = 0; i + 1 < 5; ++i) t = t * step_matrix(DigitVector{1, 2, 0, 1});
  const auto moved = act(t, pl);
  for (auto _ : state) benchmark::DoNotOptimize(pl_isomorphic(pl, moved));
}
BENCHMARK(BM_PlIsomorphic);

static void BM_BuildRepresentation(benchmark::State& state) {
  const auto theta = jpa_state(cube_roots(), 1);
  const IntMatrix q = step_matrix(DigitVector{1, 2});
  std::vector<GeneratorAction> actions{GeneratorAction::from_matrix("g", q.transpose())};
  TailOptions options;
  options.expansion_depth = 40;
  for (auto _ : state) benchmark::DoNotOptimize(build_representation(theta, actions, options));
}
BENCHMARK(BM_BuildRepresentation);
BENCHMARK_MAIN();
