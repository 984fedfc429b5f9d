#include "hubness/synth.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hubness/dissim.hpp"
#include "hubness/error.hpp"
#include "hubness/hubstats.hpp"
#include "hubness/rng.hpp"

namespace hubness {

DenseMatrix gaussian_matrix(std::size_t n, std::size_t d, std::uint64_t seed) {
  const CounterRng rng(seed, streams::gaussian);
  MatrixBuilder builder(n, d);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = builder.row(r);
    for (std::size_t c = 0; c < d; ++c) row[c] = rng.normal(r * d + c);
  }
  return std::move(builder).build();
}

DenseMatrix peaked_softmax_matrix(std::size_t n, std::size_t v, double sharpness,
                                  std::uint64_t seed) {
  if (v < 2) throw_usage("peaked_softmax_matrix needs v >= 2");
  if (!(sharpness >= 0.0) || !std::isfinite(sharpness)) {
    throw_usage("sharpness must be a finite value >= 0");
  }
  const CounterRng rng(seed, streams::peaked);
  MatrixBuilder builder(n, v);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = builder.row(r);
    for (std::size_t c = 0; c < v; ++c) row[c] = sharpness * rng.normal(r * v + c);
    softmax_inplace(row);
  }
  return std::move(builder).build();
}

std::uint64_t sweep_seed(std::uint64_t seed, std::size_t dim_index) {
  return CounterRng(seed, streams::sweep).bits(dim_index)[0];
}

SweepResult rv_scan(std::span<const std::size_t> dims, std::size_t n, const SweepMode& mode,
                    std::uint64_t seed, const SweepOptions& options) {
  if (dims.empty()) throw_usage("rv_scan needs at least one dimension");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] == 0 || (i > 0 && dims[i] <= dims[i - 1])) {
      throw_usage("dims must be positive and strictly ascending");
    }
  }
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  SweepResult result;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const std::size_t dim = dims[i];
    const std::uint64_t dim_seed = sweep_seed(seed, i);
    HistogramOptions hist;
    hist.bins = 1;
    hist.sample_pairs = options.sample_pairs;
    hist.seed = dim_seed;
    TopkOptions topk;
    topk.k = options.k;
    topk.threads = options.threads;

    ConcentrationDiag diag;
    KOccurrence occ;
    if (mode.kind == SweepKind::euclidean_gaussian) {
      const DenseMatrix points = gaussian_matrix(n, dim, dim_seed);
      hist.exclude_self = true;
      topk.exclude_self = true;
      diag = distance_histogram(points, points, Measure::euclidean, hist);
      occ = topk_stream(points, points, Measure::euclidean, topk).occurrence;
    } else {
      const DenseMatrix prob = peaked_softmax_matrix(n, dim, mode.sharpness, dim_seed);
      diag = probability_histogram(prob, hist);
      occ = topk_probability(prob, topk).occurrence;
    }

    double kskew = nan;
    try {
      kskew = skewness(occ);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::numeric) throw;
    }
    result.dims.push_back(dim);
    result.rv.push_back(diag.relative_variance.value_or(nan));
    result.kskew.push_back(kskew);
  }
  return result;
}

}  // namespace hubness
