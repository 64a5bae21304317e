#include <benchmark/benchmark.h>

#include "dehnforge/cathelineau.hpp"
#include "dehnforge/classical.hpp"
#include "dehnforge/dehn.hpp"
#include "dehnforge/euclid_complex.hpp"
#include "dehnforge/relation.hpp"
#include "dehnforge/samples.hpp"

using namespace dehnforge;

namespace {

void BM_EuclideanDehn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PointSimplex g = random_point_simplex(n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(euclidean_dehn(g));
}
BENCHMARK(BM_EuclideanDehn)->Arg(2)->Arg(3);

void BM_Coassoc(benchmark::State& state) {
  const PointSimplex g = random_point_simplex(3, 42);
  for (auto _ : state) benchmark::DoNotOptimize(coassoc_check(g));
}
BENCHMARK(BM_Coassoc);

void BM_FindRelation(benchmark::State& state) {
  RelationQuery q;
  q.values = {arccos_symbol(Scalar(Rational(1, 3))), pi_symbol()};
  q.precision_digits = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_relation(q));
}
BENCHMARK(BM_FindRelation)->Arg(50)->Arg(200);

void BM_Cathelineau(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto field = state.range(1) ? SampleField::RationalFunctions : SampleField::Rationals;
  const auto gens = sample_arguments(field, 200, 7);
  for (auto _ : state) benchmark::DoNotOptimize(build_cathelineau_complex(n, gens));
}
BENCHMARK(BM_Cathelineau)->Args({2, 0})->Args({3, 0})->Args({4, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_EuclidComplex(benchmark::State& state) {
  const auto gens = random_point_simplices(3, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(build_euclidean_dehn_complex(3, gens));
}
BENCHMARK(BM_EuclidComplex)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
