#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hubness/freqcorr.hpp"
#include "hubness/hubstats.hpp"
#include "hubness/matrixio.hpp"
#include "hubness/predeval.hpp"
#include "hubness/synth.hpp"

namespace hubness {

using Json = nlohmann::ordered_json;

struct ProbabilityDiagnostics {
  double mean_dissim = 0.0;
  double relative_variance = 0.0;
  double mean_l2_to_uniform = 0.0;
};

struct MitigationOutcome {
  std::string method;
  std::optional<double> k_skew_before;
  std::optional<double> k_skew_after;
  std::size_t num_hubs_before = 0;
};

struct AnalysisReport {
  std::string command;
  std::string measure;
  std::size_t k = 0;
  std::uint64_t hub_threshold = 0;
  std::size_t num_queries = 0;
  std::size_t num_candidates = 0;
  std::optional<double> k_skew;
  HubSet hubs;
  HubSummary summary;
  std::optional<ProbabilityDiagnostics> diagnostics;
  std::optional<CorrelationReport> correlation;
  std::optional<AccuracyPartition> accuracy;
  std::optional<MitigationOutcome> mitigation;
  Json config = Json::object();
};

// Keys follow the struct field names. Optional values serialize as null;
// hubs carry a "token" string when a vocabulary is given.
Json to_json(const AnalysisReport& report, const Vocabulary* vocab = nullptr);
Json to_json(const ConcentrationDiag& diag);
Json to_json(const SweepResult& sweep);

// Two-space indented, trailing newline. Doubles use the shortest text that
// reads back to the same binary64 value.
std::string dump_json(const Json& doc);

// Doubles in CSV output: 17 significant digits, NaN as "NA".
std::string format_real(double value);

// bin_left,bin_right,count
std::string histogram_csv(const Histogram& h);
// Distribution of N_k values: one unit-wide bin per occurring value.
std::string koccurrence_csv(const KOccurrence& occ);
// token_id,token,n_k,count for every hub (or every candidate with all_tokens).
std::string scatter_csv(const KOccurrence& occ, const HubSet& hubs, const FrequencyTable& freq,
                        const Vocabulary* vocab, bool all_tokens);
// dim,rv,kskew
std::string sweep_csv(const SweepResult& sweep);

}  // namespace hubness
