#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hubness/matrix.hpp"

namespace hubness {

// n x d standard normal samples; element (r, c) is normal number r*d + c of
// CounterRng(seed, streams::gaussian).
DenseMatrix gaussian_matrix(std::size_t n, std::size_t d, std::uint64_t seed);

// Rows softmax(sharpness * z) for standard normal logits z drawn from the
// peaked stream. sharpness 0 gives exactly uniform rows. Throws Error(usage)
// for v < 2 or negative sharpness.
DenseMatrix peaked_softmax_matrix(std::size_t n, std::size_t v, double sharpness,
                                  std::uint64_t seed);

enum class SweepKind {
  euclidean_gaussian,   // dim = representation dimension
  probability_peaked,   // dim = vocabulary size v
};

struct SweepMode {
  SweepKind kind = SweepKind::euclidean_gaussian;
  double sharpness = 0.0;  // probability_peaked only
};

struct SweepOptions {
  std::size_t k = 10;
  std::uint64_t sample_pairs = 1'000'000;
  unsigned threads = 1;
};

// Aligned by index. rv or kskew is NaN where undefined (e.g. every
// k-occurrence equal).
struct SweepResult {
  std::vector<std::size_t> dims;
  std::vector<double> rv;
  std::vector<double> kskew;
};

// Seed used for dims[i]: the first word of CounterRng(seed, streams::sweep)
// at index i.
std::uint64_t sweep_seed(std::uint64_t seed, std::size_t dim_index);

// For each dim: relative variance of sampled pairwise dissimilarities
// (self pairs excluded in the Euclidean mode) and the k-skew of the exact
// k-NN graph. Throws Error(usage) unless dims is non-empty, positive and
// strictly ascending.
SweepResult rv_scan(std::span<const std::size_t> dims, std::size_t n, const SweepMode& mode,
                    std::uint64_t seed, const SweepOptions& options = {});

}  // namespace hubness
