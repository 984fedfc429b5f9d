#include "hubness/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace hubness {
namespace {

Json optional_number(const std::optional<double>& v) {
  return v && std::isfinite(*v) ? Json(*v) : Json(nullptr);
}

std::string csv_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Json to_json(const AnalysisReport& report, const Vocabulary* vocab) {
  Json doc;
  doc["command"] = report.command;
  doc["measure"] = report.measure;
  doc["k"] = report.k;
  doc["hub_threshold"] = report.hub_threshold;
  doc["num_queries"] = report.num_queries;
  doc["num_candidates"] = report.num_candidates;
  doc["k_skew"] = optional_number(report.k_skew);

  Json hubs = Json::array();
  for (const auto& h : report.hubs.members) {
    Json entry;
    entry["id"] = h.id;
    entry["n_k"] = h.n_k;
    if (vocab != nullptr && h.id < vocab->size()) entry["token"] = vocab->tokens[h.id];
    hubs.push_back(std::move(entry));
  }
  doc["hubs"] = std::move(hubs);

  doc["summary"] = {
      {"num_hubs", report.summary.num_hubs},
      {"median", optional_number(report.summary.median)},
      {"mean", optional_number(report.summary.mean)},
      {"max", optional_number(report.summary.max)},
      {"variance", optional_number(report.summary.variance)},
  };

  if (report.diagnostics) {
    doc["diagnostics"] = {
        {"mean_dissim", report.diagnostics->mean_dissim},
        {"relative_variance", report.diagnostics->relative_variance},
        {"mean_l2_to_uniform", report.diagnostics->mean_l2_to_uniform},
    };
  } else {
    doc["diagnostics"] = nullptr;
  }

  if (report.correlation) {
    doc["correlation"] = {
        {"rho", report.correlation->rho},
        {"n", report.correlation->n},
        {"frequency_source", report.correlation->frequency_source},
        {"epsilon_for_log", report.correlation->epsilon_for_log},
    };
  } else {
    doc["correlation"] = nullptr;
  }

  if (report.accuracy) {
    const auto& a = *report.accuracy;
    doc["accuracy"] = {
        {"all", a.all},
        {"hub", optional_number(a.hub)},
        {"non_hub", optional_number(a.non_hub)},
        {"total", a.total},
        {"hub_predicted", a.hub_predicted},
        {"non_hub_predicted", a.non_hub_predicted},
    };
  } else {
    doc["accuracy"] = nullptr;
  }

  if (report.mitigation) {
    doc["mitigation"] = {
        {"method", report.mitigation->method},
        {"k_skew_before", optional_number(report.mitigation->k_skew_before)},
        {"k_skew_after", optional_number(report.mitigation->k_skew_after)},
        {"num_hubs_before", report.mitigation->num_hubs_before},
    };
  } else {
    doc["mitigation"] = nullptr;
  }

  doc["config"] = report.config;
  return doc;
}

Json to_json(const ConcentrationDiag& diag) {
  Json doc;
  doc["sampled_pairs"] = diag.sampled_pairs;
  doc["exhaustive"] = diag.exhaustive;
  doc["min_dist"] = diag.min_dist;
  doc["max_dist"] = diag.max_dist;
  doc["mean_dist"] = diag.mean_dist;
  doc["relative_variance"] = optional_number(diag.relative_variance);
  doc["histogram"] = {{"edges", diag.histogram.edges}, {"counts", diag.histogram.counts}};
  return doc;
}

Json to_json(const SweepResult& sweep) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < sweep.dims.size(); ++i) {
    rows.push_back({{"dim", sweep.dims[i]},
                    {"rv", optional_number(sweep.rv[i])},
                    {"kskew", optional_number(sweep.kskew[i])}});
  }
  return rows;
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string format_real(double value) {
  if (std::isnan(value)) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string histogram_csv(const Histogram& h) {
  std::string out = "bin_left,bin_right,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out += format_real(h.edges[i]) + "," + format_real(h.edges[i + 1]) + "," +
           std::to_string(h.counts[i]) + "\n";
  }
  return out;
}

std::string koccurrence_csv(const KOccurrence& occ) {
  std::map<std::uint64_t, std::uint64_t> distribution;
  for (auto c : occ.counts) ++distribution[c];
  std::string out = "bin_left,bin_right,count\n";
  for (const auto& [value, count] : distribution) {
    out += std::to_string(value) + "," + std::to_string(value + 1) + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string scatter_csv(const KOccurrence& occ, const HubSet& hubs, const FrequencyTable& freq,
                        const Vocabulary* vocab, bool all_tokens) {
  std::string out = "token_id,token,n_k,count\n";
  auto row = [&](std::size_t id, std::uint64_t n_k) {
    const std::string token = vocab != nullptr && id < vocab->size() ? vocab->tokens[id] : "";
    out += std::to_string(id) + "," + csv_quote(token) + "," + std::to_string(n_k) + "," +
           std::to_string(freq.count(id)) + "\n";
  };
  if (all_tokens) {
    for (std::size_t id = 0; id < occ.counts.size(); ++id) row(id, occ.counts[id]);
  } else {
    for (const auto& h : hubs.members) row(h.id, h.n_k);
  }
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out = "dim,rv,kskew\n";
  for (std::size_t i = 0; i < sweep.dims.size(); ++i) {
    out += std::to_string(sweep.dims[i]) + "," + format_real(sweep.rv[i]) + "," +
           format_real(sweep.kskew[i]) + "\n";
  }
  return out;
}

}  // namespace hubness
