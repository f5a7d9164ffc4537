#include <benchmark/benchmark.h>

#include "supercluster/characters.hpp"
#include "supercluster/clusters.hpp"
#include "supercluster/discrete.hpp"
#include "supercluster/oracle.hpp"
#include "supercluster/tensor.hpp"

namespace sc = supercluster;

namespace {

sc::Field field_of(int q) { return q == 4 ? sc::Field::make(2, 2) : sc::Field::make(q, 1); }

void BM_EnumerateTemplates(benchmark::State& state) {
  const auto F = field_of(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(sc::enumerate_templates(static_cast<int>(state.range(0)), F));
}
BENCHMARK(BM_EnumerateTemplates)->Args({5, 2})->Args({5, 3})->Args({6, 2});

void BM_ClassifyAllPoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto F = field_of(static_cast<int>(state.range(1)));
  const sc::PointCodec codec(F, n);
  for (auto _ : state) {
    for (std::uint64_t c = 0; c < codec.size(); ++c) {
      benchmark::DoNotOptimize(sc::coadjoint_template_of(F, codec.decode_functional(c)));
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * codec.size()));
}
BENCHMARK(BM_ClassifyAllPoints)->Args({4, 3})->Args({5, 2});

void BM_BruteDecomposition(benchmark::State& state) {
  const auto F = field_of(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(sc::oracle::decompose_dual(static_cast<int>(state.range(0)), F));
}
BENCHMARK(BM_BruteDecomposition)->Args({4, 3})->Args({5, 2});

void BM_BuildTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto F = field_of(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(sc::build_table(n, F));
}
BENCHMARK(BM_BuildTable)->Args({4, 2})->Args({4, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);

void BM_TensorRewrite(benchmark::State& state) {
  const auto F = field_of(3);
  const auto ts = sc::enumerate_templates(5, F);
  for (auto _ : state) {
    for (std::size_t k = 0; k + 1 < ts.size(); k += 37) benchmark::DoNotOptimize(sc::tensor_templates(F, ts[k], ts[k + 1]));
  }
}
BENCHMARK(BM_TensorRewrite)->Unit(benchmark::kMillisecond);

void BM_TensorCounting(benchmark::State& state) {
  const auto F = field_of(2);
  const auto t = sc::parse_template(F, 4, "(1,3)=1;(2,4)=1");
  for (auto _ : state) benchmark::DoNotOptimize(sc::tensor_by_counting(F, t, t));
}
BENCHMARK(BM_TensorCounting)->Unit(benchmark::kMillisecond);

void BM_DeltaDecompose(benchmark::State& state) {
  const auto F = field_of(3);
  for (auto _ : state) benchmark::DoNotOptimize(sc::delta_decompose(static_cast<int>(state.range(0)), F));
}
BENCHMARK(BM_DeltaDecompose)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
