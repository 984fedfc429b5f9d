#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hubness/dissim.hpp"
#include "hubness/matrix.hpp"
#include "hubness/neighbors.hpp"

namespace hubness {

// Population skewness (1/n) sum ((x_i - mu) / sigma)^3 with sigma using
// divisor n. Throws Error(usage) for fewer than two values and
// Error(numeric) for zero variance.
double skewness(std::span<const double> values);
double skewness(const KOccurrence& occ);

// Throws Error(usage) if a neighbor id is >= num_candidates.
KOccurrence k_occurrence(std::span<const NeighborList> neighbors, std::size_t num_candidates);

struct Hub {
  std::size_t id = 0;
  std::uint64_t n_k = 0;

  friend bool operator==(const Hub&, const Hub&) = default;
};

struct HubSet {
  std::uint64_t threshold = 0;
  std::vector<Hub> members;  // N_k descending, ties by ascending id

  bool contains(std::size_t id) const;
  friend bool operator==(const HubSet&, const HubSet&) = default;
};

HubSet detect_hubs(const KOccurrence& occ, std::uint64_t threshold);

// Statistics over hub N_k values; everything but num_hubs is absent for an
// empty hub set. Median of an even count is the midpoint mean; variance is
// the population variance.
struct HubSummary {
  std::size_t num_hubs = 0;
  std::optional<double> median;
  std::optional<double> mean;
  std::optional<double> max;
  std::optional<double> variance;
};

HubSummary hub_summary(const HubSet& hubs);

// Population variance over squared mean. Throws Error(usage) for fewer than
// two values and Error(numeric) if the mean is not positive.
double relative_variance(std::span<const double> distances);

struct Histogram {
  std::vector<double> edges;          // bins + 1 edges
  std::vector<std::uint64_t> counts;  // bins
};

// Equal-width bins over [0, max_value]; the top edge is inclusive. With
// max_value == 0 every value lands in the first bin.
Histogram histogram(std::span<const double> values, std::size_t bins, double max_value);

struct ConcentrationDiag {
  Histogram histogram;
  double min_dist = 0.0;
  double max_dist = 0.0;
  double mean_dist = 0.0;
  std::optional<double> relative_variance;  // absent when undefined (mean 0 or one pair)
  std::uint64_t sampled_pairs = 0;
  bool exhaustive = false;
};

struct HistogramOptions {
  std::size_t bins = 100;
  std::uint64_t sample_pairs = 1'000'000;
  std::uint64_t seed = 0;
  bool exclude_self = false;
};

// Samples query-candidate pairs uniformly with replacement using the
// seeded counter-based generator, or takes every eligible pair in
// row-major order when there are no more than `sample_pairs` of them.
// `exclude_self` has the same meaning as in topk_stream.
ConcentrationDiag distance_histogram(const DenseMatrix& queries, const DenseMatrix& candidates,
                                     Measure measure, const HistogramOptions& options);

// Probability rows as queries, columns as candidates.
ConcentrationDiag probability_histogram(const DenseMatrix& prob, const HistogramOptions& options);

// Histogram and moments of distances that were drawn elsewhere.
ConcentrationDiag summarize_distances(std::vector<double> distances, std::size_t bins,
                                      bool exhaustive);

// Mean over rows of sqrt(sum_j (p_j - 1/v)^2). Throws Error(data) on an
// invalid probability row.
double mean_l2_to_uniform(const DenseMatrix& prob);

}  // namespace hubness
