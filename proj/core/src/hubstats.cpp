#include "hubness/hubstats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hubness/error.hpp"
#include "hubness/rng.hpp"

namespace hubness {
namespace {

// Deviations from the sample mean, computed after shifting by the first
// value so that constant input yields exact zeros.
std::vector<double> centered(std::span<const double> values, double& mean) {
  const double shift = values.front();
  double sum = 0.0;
  for (double x : values) sum += x - shift;
  const double shifted_mean = sum / static_cast<double>(values.size());
  std::vector<double> dev(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) dev[i] = (values[i] - shift) - shifted_mean;
  mean = shift + shifted_mean;
  return dev;
}

template <typename DissimFn>
ConcentrationDiag sample_and_summarize(std::size_t num_queries, std::size_t num_candidates,
                                       bool exclude_self, const HistogramOptions& options,
                                       DissimFn dissim) {
  if (options.bins == 0) throw_usage("bins must be at least 1");
  if (options.sample_pairs == 0) throw_usage("sample-pairs must be at least 1");
  const std::uint64_t per_query = num_candidates - (exclude_self && num_candidates > 0 ? 1 : 0);
  const std::uint64_t total = static_cast<std::uint64_t>(num_queries) * per_query;
  if (total == 0) throw_usage("no eligible query-candidate pairs");

  auto pair_at = [&](std::uint64_t index) {
    const std::size_t q = index / per_query;
    std::size_t c = index % per_query;
    if (exclude_self && c >= q) ++c;
    return std::pair{q, c};
  };

  const bool exhaustive = total <= options.sample_pairs;
  std::vector<double> distances;
  if (exhaustive) {
    distances.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) {
      const auto [q, c] = pair_at(i);
      distances.push_back(dissim(q, c));
    }
  } else {
    const CounterRng rng(options.seed, streams::pair_sampler);
    distances.reserve(options.sample_pairs);
    for (std::uint64_t i = 0; i < options.sample_pairs; ++i) {
      const auto [q, c] = pair_at(rng.below(i, total));
      distances.push_back(dissim(q, c));
    }
  }
  return summarize_distances(std::move(distances), options.bins, exhaustive);
}

}  // namespace

double skewness(std::span<const double> values) {
  if (values.size() < 2) throw_usage("skewness needs at least two values");
  double mean = 0.0;
  const auto dev = centered(values, mean);
  const double n = static_cast<double>(values.size());
  double m2 = 0.0;
  for (double d : dev) m2 += d * d;
  const double sigma = std::sqrt(m2 / n);
  if (sigma == 0.0) throw_numeric("skewness undefined: input has zero variance");
  double sum = 0.0;
  for (double d : dev) {
    const double z = d / sigma;
    sum += z * z * z;
  }
  return sum / n;
}

double skewness(const KOccurrence& occ) {
  std::vector<double> values(occ.counts.begin(), occ.counts.end());
  return skewness(values);
}

KOccurrence k_occurrence(std::span<const NeighborList> neighbors, std::size_t num_candidates) {
  KOccurrence occ;
  occ.counts.assign(num_candidates, 0);
  occ.num_queries = neighbors.size();
  occ.k = neighbors.empty() ? 0 : neighbors.front().entries.size();
  for (const auto& list : neighbors) {
    if (list.entries.size() != occ.k) throw_usage("neighbor lists have differing lengths");
    for (const auto& entry : list.entries) {
      if (entry.candidate >= num_candidates) {
        throw_usage("neighbor id " + std::to_string(entry.candidate) + " out of range for " +
                    std::to_string(num_candidates) + " candidates");
      }
      ++occ.counts[entry.candidate];
    }
  }
  return occ;
}

bool HubSet::contains(std::size_t id) const {
  return std::any_of(members.begin(), members.end(), [id](const Hub& h) { return h.id == id; });
}

HubSet detect_hubs(const KOccurrence& occ, std::uint64_t threshold) {
  if (threshold == 0) throw_usage("hub threshold must be at least 1");
  HubSet hubs;
  hubs.threshold = threshold;
  for (std::size_t id = 0; id < occ.counts.size(); ++id) {
    if (occ.counts[id] >= threshold) hubs.members.push_back({id, occ.counts[id]});
  }
  std::stable_sort(hubs.members.begin(), hubs.members.end(),
                   [](const Hub& a, const Hub& b) { return a.n_k > b.n_k; });
  return hubs;
}

HubSummary hub_summary(const HubSet& hubs) {
  HubSummary s;
  s.num_hubs = hubs.members.size();
  if (hubs.members.empty()) return s;

  std::vector<double> values;
  values.reserve(hubs.members.size());
  for (const auto& h : hubs.members) values.push_back(static_cast<double>(h.n_k));
  std::sort(values.begin(), values.end());

  const std::size_t n = values.size();
  s.median = n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
  s.max = values.back();
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(n);
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  s.mean = mean;
  s.variance = sq / static_cast<double>(n);
  return s;
}

double relative_variance(std::span<const double> distances) {
  if (distances.size() < 2) throw_usage("relative variance needs at least two values");
  double mean = 0.0;
  const auto dev = centered(distances, mean);
  if (!(mean > 0.0)) throw_numeric("relative variance undefined: mean is not positive");
  double sq = 0.0;
  for (double d : dev) sq += d * d;
  const double variance = sq / static_cast<double>(distances.size());
  return variance / (mean * mean);
}

Histogram histogram(std::span<const double> values, std::size_t bins, double max_value) {
  if (bins == 0) throw_usage("bins must be at least 1");
  Histogram h;
  h.edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    h.edges[i] = max_value * static_cast<double>(i) / static_cast<double>(bins);
  }
  h.edges.back() = max_value;
  h.counts.assign(bins, 0);
  for (double v : values) {
    std::size_t bin = 0;
    if (max_value > 0.0 && v > 0.0) {
      bin = std::min(bins - 1, static_cast<std::size_t>(v / max_value * static_cast<double>(bins)));
      // The division can land one bin off near an edge; the edges decide.
      while (bin > 0 && v < h.edges[bin]) --bin;
      while (bin + 1 < bins && v >= h.edges[bin + 1]) ++bin;
    }
    ++h.counts[bin];
  }
  return h;
}

ConcentrationDiag summarize_distances(std::vector<double> distances, std::size_t bins,
                                      bool exhaustive) {
  if (distances.empty()) throw_usage("no distances to summarize");
  ConcentrationDiag diag;
  diag.sampled_pairs = distances.size();
  diag.exhaustive = exhaustive;
  const auto [lo, hi] = std::minmax_element(distances.begin(), distances.end());
  diag.min_dist = *lo;
  diag.max_dist = *hi;
  double mean = 0.0;
  centered(distances, mean);
  diag.mean_dist = mean;
  if (distances.size() >= 2 && mean > 0.0) diag.relative_variance = relative_variance(distances);
  diag.histogram = histogram(distances, bins, std::max(0.0, diag.max_dist));
  return diag;
}

ConcentrationDiag distance_histogram(const DenseMatrix& queries, const DenseMatrix& candidates,
                                     Measure measure, const HistogramOptions& options) {
  if (options.exclude_self && &queries != &candidates) {
    throw_usage("exclude_self requires queries and candidates to be the same matrix");
  }
  if (queries.cols() != candidates.cols()) {
    throw_usage("shape mismatch: queries have " + std::to_string(queries.cols()) +
                " columns, candidates " + std::to_string(candidates.cols()));
  }
  const std::size_t nq = queries.rows();
  const std::size_t nc = candidates.rows();

  switch (measure) {
    case Measure::euclidean:
      return sample_and_summarize(nq, nc, options.exclude_self, options, [&](std::size_t q, std::size_t c) {
        return euclidean(queries.row(q), candidates.row(c));
      });
    case Measure::normalized_euclidean: {
      std::vector<std::vector<double>> unit_q(nq), unit_c(nc);
      auto unit = [](std::vector<std::vector<double>>& cache, const DenseMatrix& m, std::size_t r)
          -> const std::vector<double>& {
        if (cache[r].empty()) cache[r] = unit_vector(m.row(r));
        return cache[r];
      };
      return sample_and_summarize(nq, nc, options.exclude_self, options, [&](std::size_t q, std::size_t c) {
        return euclidean(unit(unit_q, queries, q), unit(unit_c, candidates, c));
      });
    }
    case Measure::softmax_dot:
    case Measure::probability: {
      // Per-query softmax normalizers, filled on first use.
      struct Normalizer {
        double max = 0.0;
        double sum = 0.0;
        bool ready = false;
      };
      std::vector<Normalizer> norms(nq);
      std::vector<double> logits(nc);
      auto logit = [&](std::size_t q, std::size_t c) {
        double s = 0.0;
        const auto a = queries.row(q);
        const auto b = candidates.row(c);
        for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
        return s;
      };
      return sample_and_summarize(nq, nc, options.exclude_self, options, [&](std::size_t q, std::size_t c) {
        Normalizer& n = norms[q];
        if (!n.ready) {
          for (std::size_t j = 0; j < nc; ++j) logits[j] = logit(q, j);
          n.max = *std::max_element(logits.begin(), logits.end());
          if (!std::isfinite(n.max)) throw_numeric("softmax: logit overflow");
          for (std::size_t j = 0; j < nc; ++j) n.sum += std::exp(logits[j] - n.max);
          n.ready = true;
        }
        return 1.0 - std::exp(logit(q, c) - n.max) / n.sum;
      });
    }
  }
  throw_usage("unknown measure");
}

ConcentrationDiag probability_histogram(const DenseMatrix& prob, const HistogramOptions& options) {
  if (options.exclude_self && prob.rows() != prob.cols()) {
    throw_usage("exclude_self on probability rows requires a square matrix");
  }
  for (std::size_t r = 0; r < prob.rows(); ++r) check_probability_row(prob.row(r), r);
  return sample_and_summarize(prob.rows(), prob.cols(), options.exclude_self, options,
                              [&](std::size_t q, std::size_t c) { return 1.0 - prob(q, c); });
}

double mean_l2_to_uniform(const DenseMatrix& prob) {
  if (prob.rows() == 0 || prob.cols() == 0) throw_usage("mean_l2_to_uniform needs a non-empty matrix");
  std::vector<ProbabilityRowSummary> rows(prob.rows());
  for (std::size_t r = 0; r < prob.rows(); ++r) {
    check_probability_row(prob.row(r), r);
    rows[r] = summarize_probability_row(prob.row(r));
  }
  return combine_probability_rows(rows, prob.cols()).mean_l2_to_uniform;
}

}  // namespace hubness
