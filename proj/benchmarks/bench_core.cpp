#include <benchmark/benchmark.h>

#include "mtile/oracle.hpp"
#include "support/generators.hpp"

using namespace mtile;
using namespace mtile::testing;

namespace {

void BM_FieldMul(benchmark::State& state) {
  Gen gen(1);
  const Field f = sqrt2_field();
  const FieldElement x = gen.element(f, Style::Generic), y = gen.element(f, Style::Generic);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_FieldMul);

void BM_FieldInverse(benchmark::State& state) {
  const FieldElement x = s2(Rational(3, 7), Rational(-5, 2));
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_FieldInverse);

void BM_FieldSign(benchmark::State& state) {
  // 665857/470832 - sqrt2 ~ 1.6e-12 needs deep refinement.
  const FieldElement x = s2(Rational(665857, 470832), -1);
  for (auto _ : state) benchmark::DoNotOptimize(sign(x));
}
BENCHMARK(BM_FieldSign);

void BM_IsDiscrete(benchmark::State& state) {
  Gen gen(2);
  const Field f = sqrt2_field();
  const PlanarVector b1 = gen.vector(f, Style::Generic);
  PlanarVector b2 = gen.vector(f, Style::Generic);
  while (parallel(b1, b2)) b2 = gen.vector(f, Style::Generic);
  std::vector<PlanarVector> gens{b1, b2};
  for (int64_t i = 0; i < state.range(0); ++i) {
    gens.push_back(gen.small_rational() * b1 + gen.small_rational() * b2);
  }
  for (auto _ : state) benchmark::DoNotOptimize(is_discrete(gens));
}
BENCHMARK(BM_IsDiscrete)->Arg(2)->Arg(8)->Arg(32);

void BM_Decide(benchmark::State& state) {
  Gen gen(3);
  const Polygon p = random_polygon(gen, sqrt2_field(), static_cast<std::size_t>(state.range(0)), Style::Generic);
  for (auto _ : state) benchmark::DoNotOptimize(decide(p));
}
BENCHMARK(BM_Decide)->Arg(4)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_DecideRational(benchmark::State& state) {
  Gen gen(4);
  const Polygon p = random_polygon(gen, q_field(), static_cast<std::size_t>(state.range(0)), Style::Rational);
  for (auto _ : state) benchmark::DoNotOptimize(decide(p));
}
BENCHMARK(BM_DecideRational)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SampleVerify(benchmark::State& state) {
  const Field q = q_field();
  const Polygon oct = validate_polygon(rational_octagon(q));
  const LatticeBasis z2 = LatticeBasis::standard(q);
  for (auto _ : state) benchmark::DoNotOptimize(sample_verify(oct, z2, 7, 100, 0));
}
BENCHMARK(BM_SampleVerify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
