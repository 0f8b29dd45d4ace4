// Serial reference vs OpenMP kernels on seeded random hypergraphs.
//   ./bench_kernels --benchmark_filter=Census

#include <benchmark/benchmark.h>

#include "hypercc/clustering.hpp"
#include "hypercc/motifs.hpp"
#include "hypercc/testkit/random.hpp"

using namespace hypercc;

namespace {

const Hypergraph& graph(std::int64_t which) {
  static const Hypergraph small =
      testkit::random_hypergraph({.n = 250, .m = 4000, .min_size = 2, .max_size = 4, .seed = 11});
  static const Hypergraph wide =
      testkit::random_hypergraph({.n = 600, .m = 800, .min_size = 2, .max_size = 16, .seed = 12});
  return which == 0 ? small : wide;
}

void BM_CCSerial(benchmark::State& state) {
  const auto& h = graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cc_all_serial(h));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(h.num_nodes()));
}

void BM_CCParallel(benchmark::State& state) {
  const auto& h = graph(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cc_all(h, {.threads = threads}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(h.num_nodes()));
}

void BM_CensusSerial(benchmark::State& state) {
  const auto& h = graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_order3_serial(h, InductionRule::kIntersect));
}

void BM_CensusParallel(benchmark::State& state) {
  const auto& h = graph(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(census_order3(h, InductionRule::kIntersect, threads));
}

void thread_args(benchmark::internal::Benchmark* b) {
  for (std::int64_t g : {0, 1}) {
    for (std::int64_t t : {1, 2, 4, 8}) b->Args({g, t});
  }
}

}  // namespace

BENCHMARK(BM_CCSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CCParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CensusSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
