#include <benchmark/benchmark.h>

#include "hubness/dissim.hpp"
#include "hubness/hubstats.hpp"
#include "hubness/mitigate.hpp"
#include "hubness/synth.hpp"

using namespace hubness;

static void BM_TopkEuclidean(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<std::size_t>(state.range(1));
  const DenseMatrix pts = gaussian_matrix(n, d, 1);
  TopkOptions opts;
  opts.exclude_self = true;
  for (auto _ : state) benchmark::DoNotOptimize(topk_stream(pts, pts, Measure::euclidean, opts));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n * n));
}
BENCHMARK(BM_TopkEuclidean)->Args({2000, 3})->Args({2000, 300})->Unit(benchmark::kMillisecond);

static void BM_TopkSoftmaxDot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto v = static_cast<std::size_t>(state.range(1));
  const DenseMatrix contexts = gaussian_matrix(n, 64, 2);
  const DenseMatrix unembed = gaussian_matrix(v, 64, 3);
  TopkOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(topk_stream(contexts, unembed, Measure::softmax_dot, opts));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n * v));
}
BENCHMARK(BM_TopkSoftmaxDot)->Args({500, 5000})->Unit(benchmark::kMillisecond);

static void BM_Softmax(benchmark::State& state) {
  const auto v = static_cast<std::size_t>(state.range(0));
  const DenseMatrix logits = gaussian_matrix(1, v, 4);
  std::vector<double> row(v);
  for (auto _ : state) {
    std::copy(logits.values().begin(), logits.values().end(), row.begin());
    softmax_inplace(row);
    benchmark::DoNotOptimize(row.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * v));
}
BENCHMARK(BM_Softmax)->Arg(50000);

static void BM_DistanceHistogram(benchmark::State& state) {
  const DenseMatrix pts = gaussian_matrix(10000, 300, 5);
  HistogramOptions opts;
  opts.sample_pairs = static_cast<std::uint64_t>(state.range(0));
  opts.exclude_self = true;
  for (auto _ : state) benchmark::DoNotOptimize(distance_histogram(pts, pts, Measure::euclidean, opts));
}
BENCHMARK(BM_DistanceHistogram)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_MutualProximity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix dist = pairwise_dissimilarity(gaussian_matrix(n, 50, 6), Measure::euclidean);
  for (auto _ : state) benchmark::DoNotOptimize(mutual_proximity(dist));
}
BENCHMARK(BM_MutualProximity)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_GlobalRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix dist = pairwise_dissimilarity(gaussian_matrix(n, 50, 7), Measure::euclidean);
  for (auto _ : state) benchmark::DoNotOptimize(global_rank(dist));
}
BENCHMARK(BM_GlobalRank)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
