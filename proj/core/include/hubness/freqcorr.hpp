#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hubness/hubstats.hpp"
#include "hubness/matrixio.hpp"

namespace hubness {

// Only used when plotting counts on a log axis; never enters a correlation.
inline constexpr double kLogPlotEpsilon = 1e-9;

// 1-based ranks, smallest value first; tied values share the mean of the
// ranks they span. Throws Error(usage) on empty input.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation of the average ranks. Throws Error(usage) on a length
// mismatch or fewer than two values, Error(numeric) when either side is
// constant (the correlation is undefined).
double spearman(std::span<const double> x, std::span<const double> y);

struct CorrelationReport {
  double rho = 0.0;
  std::size_t n = 0;
  std::string frequency_source;
  double epsilon_for_log = kLogPlotEpsilon;
};

// Spearman correlation between hub N_k and raw corpus counts; tokens absent
// from the table count zero. Throws Error(usage) for an empty hub set and
// Error(numeric) when the counts (or N_k values) are all equal.
CorrelationReport hub_frequency_correlation(const HubSet& hubs, const FrequencyTable& freq,
                                            std::string frequency_source);

// Same correlation over every candidate rather than the hubs only.
CorrelationReport token_frequency_correlation(const KOccurrence& occ, const FrequencyTable& freq,
                                              std::string frequency_source);

}  // namespace hubness
