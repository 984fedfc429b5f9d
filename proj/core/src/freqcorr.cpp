#include "hubness/freqcorr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hubness/error.hpp"

namespace hubness {

std::vector<double> average_ranks(std::span<const double> values) {
  if (values.empty()) throw_usage("average_ranks needs at least one value");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 hold ranks i+1..j.
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = rank;
    i = j;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw_usage("spearman: length mismatch " + std::to_string(x.size()) + " vs " +
                std::to_string(y.size()));
  }
  if (x.size() < 2) throw_usage("spearman needs at least two pairs");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  // Average ranks of n items always have mean (n + 1) / 2.
  const double mean = (static_cast<double>(x.size()) + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw_numeric("spearman undefined: an input is constant");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationReport hub_frequency_correlation(const HubSet& hubs, const FrequencyTable& freq,
                                            std::string frequency_source) {
  if (hubs.members.empty()) throw_usage("hub-frequency correlation needs at least one hub");
  std::vector<double> n_k, counts;
  n_k.reserve(hubs.members.size());
  counts.reserve(hubs.members.size());
  for (const auto& h : hubs.members) {
    n_k.push_back(static_cast<double>(h.n_k));
    counts.push_back(static_cast<double>(freq.count(h.id)));
  }
  if (n_k.size() < 2) throw_numeric("hub-frequency correlation undefined for a single hub");
  CorrelationReport report;
  report.rho = spearman(n_k, counts);
  report.n = n_k.size();
  report.frequency_source = std::move(frequency_source);
  return report;
}

CorrelationReport token_frequency_correlation(const KOccurrence& occ, const FrequencyTable& freq,
                                              std::string frequency_source) {
  std::vector<double> n_k(occ.counts.begin(), occ.counts.end());
  std::vector<double> counts(occ.counts.size());
  for (std::size_t id = 0; id < counts.size(); ++id) counts[id] = static_cast<double>(freq.count(id));
  CorrelationReport report;
  report.rho = spearman(n_k, counts);
  report.n = n_k.size();
  report.frequency_source = std::move(frequency_source);
  return report;
}

}  // namespace hubness
