#include "cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hubness/dissim.hpp"
#include "hubness/error.hpp"
#include "hubness/freqcorr.hpp"
#include "hubness/hubstats.hpp"
#include "hubness/matrixio.hpp"
#include "hubness/mitigate.hpp"
#include "hubness/predeval.hpp"
#include "hubness/report.hpp"
#include "hubness/synth.hpp"

namespace hubness::cli {
namespace {

// Every flag of every subcommand. Execution knobs (threads, block size)
// never reach the embedded config, so reports do not depend on them.
struct RunConfig {
  std::string command;

  std::string input;
  std::string contexts;
  std::string unembed;
  std::string prob;
  std::string queries;
  std::string candidates;

  std::string measure = "euclidean";
  std::size_t k = 10;
  std::uint64_t hub_threshold = 100;
  std::string exclude_self = "auto";
  std::size_t bins = 100;
  std::uint64_t sample_pairs = 1'000'000;
  std::uint64_t seed = 0;
  std::string mitigate;

  std::string freq;
  std::string freq_label;
  std::string gold;
  std::string vocab;
  bool all_tokens = false;

  std::size_t n = 10'000;
  std::vector<std::size_t> dims{3, 300};
  std::string mode = "euclidean-gaussian";
  double sharpness = 2.0;
  std::string matrix_dir;
  std::string hist_prefix;

  std::string out;
  std::string csv;
  std::string scatter;
  std::string kocc_csv;

  unsigned threads = 1;
  std::size_t block_size = 256;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::optional<Vocabulary> load_vocab(const RunConfig& cfg, std::size_t num_candidates) {
  if (cfg.vocab.empty()) return std::nullopt;
  Vocabulary vocab = read_vocabulary(cfg.vocab);
  if (vocab.size() != num_candidates) {
    throw_data("vocabulary has " + std::to_string(vocab.size()) + " tokens but there are " +
               std::to_string(num_candidates) + " candidates");
  }
  return vocab;
}

std::optional<FrequencyTable> load_freq(const RunConfig& cfg, std::size_t num_candidates) {
  if (cfg.freq.empty()) return std::nullopt;
  FrequencyTable table = read_frequency_table(cfg.freq);
  table.check_vocabulary(num_candidates);
  return table;
}

std::string frequency_label(const RunConfig& cfg) {
  return cfg.freq_label.empty() ? std::filesystem::path(cfg.freq).stem().string() : cfg.freq_label;
}

bool resolve_exclude_self(const RunConfig& cfg, Measure measure) {
  if (cfg.exclude_self == "on") return true;
  if (cfg.exclude_self == "off") return false;
  return measure == Measure::euclidean || measure == Measure::normalized_euclidean;
}

TopkOptions topk_options(const RunConfig& cfg, bool exclude_self) {
  TopkOptions opts;
  opts.k = cfg.k;
  opts.exclude_self = exclude_self;
  opts.block_size = cfg.block_size;
  opts.threads = cfg.threads;
  return opts;
}

Json base_config(const RunConfig& cfg) {
  Json c;
  c["command"] = cfg.command;
  return c;
}

void fill_hub_fields(AnalysisReport& report, const KOccurrence& occ, std::uint64_t threshold) {
  report.k = occ.k;
  report.hub_threshold = threshold;
  report.num_queries = occ.num_queries;
  report.num_candidates = occ.counts.size();
  report.k_skew = skewness(occ);
  report.hubs = detect_hubs(occ, threshold);
  report.summary = hub_summary(report.hubs);
}

void add_correlation(AnalysisReport& report, const RunConfig& cfg, const KOccurrence& occ,
                     const std::optional<FrequencyTable>& freq,
                     const std::optional<Vocabulary>& vocab, std::ostream& out) {
  if (!freq) return;
  report.correlation = cfg.all_tokens
                           ? token_frequency_correlation(occ, *freq, frequency_label(cfg))
                           : hub_frequency_correlation(report.hubs, *freq, frequency_label(cfg));
  if (!cfg.scatter.empty()) {
    emit(cfg.scatter, scatter_csv(occ, report.hubs, *freq, vocab ? &*vocab : nullptr, cfg.all_tokens),
         out);
  }
}

std::optional<ProbabilityDiagnostics> diagnostics_from(const TopkResult& result, std::size_t v) {
  if (result.probability_rows.empty()) return std::nullopt;
  const ProbabilityStats stats = combine_probability_rows(result.probability_rows, v);
  return ProbabilityDiagnostics{stats.mean, stats.relative_variance, stats.mean_l2_to_uniform};
}

int run_predictions(const RunConfig& cfg, std::ostream& out) {
  const bool from_prob = !cfg.prob.empty();
  if (from_prob == (!cfg.contexts.empty() || !cfg.unembed.empty())) {
    throw_usage("predictions needs either --prob or both --contexts and --unembed");
  }
  if (!from_prob && (cfg.contexts.empty() || cfg.unembed.empty())) {
    throw_usage("predictions needs both --contexts and --unembed");
  }

  TopkResult result;
  std::size_t v = 0;
  if (from_prob) {
    const DenseMatrix prob = read_matrix(cfg.prob);
    v = prob.cols();
    result = topk_probability(prob, topk_options(cfg, false));
  } else {
    const DenseMatrix contexts = read_matrix(cfg.contexts);
    const DenseMatrix unembed = read_matrix(cfg.unembed);
    v = unembed.rows();
    result = topk_stream(contexts, unembed, Measure::softmax_dot, topk_options(cfg, false));
  }

  const auto vocab = load_vocab(cfg, v);
  const auto freq = load_freq(cfg, v);

  AnalysisReport report;
  report.command = cfg.command;
  report.measure = std::string(to_string(Measure::probability));
  fill_hub_fields(report, result.occurrence, cfg.hub_threshold);
  report.diagnostics = diagnostics_from(result, v);
  add_correlation(report, cfg, result.occurrence, freq, vocab, out);

  if (!cfg.gold.empty()) {
    const auto gold = read_gold_labels(cfg.gold);
    if (gold.size() != result.neighbors.size()) {
      throw_data("gold file has " + std::to_string(gold.size()) + " labels for " +
                 std::to_string(result.neighbors.size()) + " contexts");
    }
    report.accuracy = accuracy_partition(top1_from_neighbors(result.neighbors), gold, report.hubs);
  }
  if (!cfg.kocc_csv.empty()) emit(cfg.kocc_csv, koccurrence_csv(result.occurrence), out);

  Json c = base_config(cfg);
  if (from_prob) {
    c["prob"] = cfg.prob;
  } else {
    c["contexts"] = cfg.contexts;
    c["unembed"] = cfg.unembed;
  }
  c["k"] = cfg.k;
  c["hub_threshold"] = cfg.hub_threshold;
  c["gold"] = cfg.gold;
  c["freq"] = cfg.freq;
  c["freq_label"] = cfg.freq.empty() ? "" : frequency_label(cfg);
  c["vocab"] = cfg.vocab;
  c["all_tokens"] = cfg.all_tokens;
  c["out"] = cfg.out;
  report.config = std::move(c);

  emit(cfg.out, dump_json(to_json(report, vocab ? &*vocab : nullptr)), out);
  return kExitOk;
}

int run_pairwise(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw_usage(cfg.command + " needs --input");
  const Measure measure = parse_measure(cfg.measure);
  if (measure == Measure::probability) {
    throw_usage(cfg.command + " supports euclidean, normalized-euclidean and softmax-dot");
  }
  const bool exclude_self = resolve_exclude_self(cfg, measure);
  const DenseMatrix points = read_matrix(cfg.input);
  const auto vocab = load_vocab(cfg, points.rows());
  const auto freq = load_freq(cfg, points.rows());

  const TopkResult before = topk_stream(points, points, measure, topk_options(cfg, exclude_self));

  AnalysisReport report;
  report.command = cfg.command;
  report.measure = std::string(to_string(measure));
  report.diagnostics = diagnostics_from(before, points.rows());

  KOccurrence final_occ = before.occurrence;
  if (!cfg.mitigate.empty()) {
    const Mitigation method = parse_mitigation(cfg.mitigate);
    const SecondaryDissim secondary =
        apply_mitigation(method, pairwise_dissimilarity(points, measure));
    // The secondary diagonal is a placeholder, so self is always excluded.
    const TopkResult after = topk_precomputed(secondary.values, topk_options(cfg, true));
    MitigationOutcome outcome;
    outcome.method = std::string(to_string(method));
    outcome.k_skew_before = skewness(before.occurrence);
    outcome.k_skew_after = skewness(after.occurrence);
    outcome.num_hubs_before = detect_hubs(before.occurrence, cfg.hub_threshold).members.size();
    report.mitigation = outcome;
    final_occ = after.occurrence;
  }

  fill_hub_fields(report, final_occ, cfg.hub_threshold);
  add_correlation(report, cfg, final_occ, freq, vocab, out);
  if (!cfg.kocc_csv.empty()) emit(cfg.kocc_csv, koccurrence_csv(final_occ), out);

  Json c = base_config(cfg);
  c["input"] = cfg.input;
  c["measure"] = report.measure;
  c["k"] = cfg.k;
  c["hub_threshold"] = cfg.hub_threshold;
  c["exclude_self"] = exclude_self;
  c["mitigate"] = cfg.mitigate;
  c["freq"] = cfg.freq;
  c["freq_label"] = cfg.freq.empty() ? "" : frequency_label(cfg);
  c["vocab"] = cfg.vocab;
  c["all_tokens"] = cfg.all_tokens;
  c["out"] = cfg.out;
  report.config = std::move(c);

  emit(cfg.out, dump_json(to_json(report, vocab ? &*vocab : nullptr)), out);
  return kExitOk;
}

int run_concentration(const RunConfig& cfg, std::ostream& out) {
  HistogramOptions opts;
  opts.bins = cfg.bins;
  opts.sample_pairs = cfg.sample_pairs;
  opts.seed = cfg.seed;

  Json c = base_config(cfg);
  ConcentrationDiag diag;
  std::string measure_name;
  if (!cfg.prob.empty()) {
    if (!cfg.queries.empty() || !cfg.candidates.empty()) {
      throw_usage("concentration takes either --prob or --queries [--candidates]");
    }
    const DenseMatrix prob = read_matrix(cfg.prob);
    opts.exclude_self = cfg.exclude_self == "on";
    diag = probability_histogram(prob, opts);
    measure_name = std::string(to_string(Measure::probability));
    c["prob"] = cfg.prob;
  } else {
    if (cfg.queries.empty()) throw_usage("concentration needs --queries or --prob");
    const Measure measure = parse_measure(cfg.measure);
    if (measure == Measure::probability && cfg.candidates.empty()) {
      throw_usage("probability measure from representations needs --candidates");
    }
    const DenseMatrix queries = read_matrix(cfg.queries);
    if (cfg.candidates.empty()) {
      opts.exclude_self = resolve_exclude_self(cfg, measure);
      diag = distance_histogram(queries, queries, measure, opts);
    } else {
      if (cfg.exclude_self == "on") throw_usage("--exclude-self on needs a single matrix");
      const DenseMatrix candidates = read_matrix(cfg.candidates);
      diag = distance_histogram(queries, candidates, measure, opts);
    }
    measure_name = std::string(to_string(measure));
    c["queries"] = cfg.queries;
    c["candidates"] = cfg.candidates;
  }
  c["measure"] = measure_name;
  c["exclude_self"] = opts.exclude_self;
  c["bins"] = cfg.bins;
  c["sample_pairs"] = cfg.sample_pairs;
  c["seed"] = cfg.seed;
  c["csv"] = cfg.csv;
  c["out"] = cfg.out;

  if (!cfg.csv.empty()) emit(cfg.csv, histogram_csv(diag.histogram), out);
  Json doc;
  doc["command"] = cfg.command;
  doc["measure"] = measure_name;
  doc["diagnostics"] = to_json(diag);
  doc["config"] = std::move(c);
  emit(cfg.out, dump_json(doc), out);
  return kExitOk;
}

int run_uniformdist(const RunConfig& cfg, std::ostream& out) {
  Json c = base_config(cfg);
  std::string comparison;
  ProbabilityStats stats;
  std::size_t rows = 0;
  std::size_t v = 0;
  if (!cfg.prob.empty()) {
    const DenseMatrix prob = read_matrix(cfg.prob);
    stats = prob_distance_stats(prob);
    rows = prob.rows();
    v = prob.cols();
    comparison = "prob";
    c["prob"] = cfg.prob;
  } else {
    TopkOptions opts = topk_options(cfg, false);
    opts.k = 1;
    TopkResult result;
    if (!cfg.input.empty()) {
      const DenseMatrix points = read_matrix(cfg.input);
      result = topk_stream(points, points, Measure::softmax_dot, opts);
      v = points.rows();
      comparison = "self";
      c["input"] = cfg.input;
    } else if (!cfg.contexts.empty() && !cfg.unembed.empty()) {
      const DenseMatrix contexts = read_matrix(cfg.contexts);
      const DenseMatrix unembed = read_matrix(cfg.unembed);
      result = topk_stream(contexts, unembed, Measure::softmax_dot, opts);
      v = unembed.rows();
      comparison = "cv";
      c["contexts"] = cfg.contexts;
      c["unembed"] = cfg.unembed;
    } else {
      throw_usage("uniformdist needs --prob, --input, or --contexts with --unembed");
    }
    rows = result.probability_rows.size();
    stats = combine_probability_rows(result.probability_rows, v);
  }
  c["out"] = cfg.out;

  Json doc;
  doc["command"] = cfg.command;
  doc["comparison"] = comparison;
  doc["rows"] = rows;
  doc["v"] = v;
  doc["mean_l2_to_uniform"] = stats.mean_l2_to_uniform;
  doc["mean_dissim"] = stats.mean;
  doc["relative_variance"] = stats.relative_variance;
  doc["config"] = std::move(c);
  emit(cfg.out, dump_json(doc), out);
  return kExitOk;
}

int run_synth(const RunConfig& cfg, std::ostream& out) {
  SweepMode mode;
  if (cfg.mode == "euclidean-gaussian") {
    mode.kind = SweepKind::euclidean_gaussian;
  } else if (cfg.mode == "probability-peaked") {
    mode.kind = SweepKind::probability_peaked;
    mode.sharpness = cfg.sharpness;
  } else {
    throw_usage("unknown synth mode '" + cfg.mode + "'");
  }
  SweepOptions opts;
  opts.k = cfg.k;
  opts.sample_pairs = cfg.sample_pairs;
  opts.threads = cfg.threads;
  const SweepResult sweep = rv_scan(cfg.dims, cfg.n, mode, cfg.seed, opts);

  // Per-dimension artifacts regenerate the exact matrices the sweep used.
  if (!cfg.matrix_dir.empty() || !cfg.hist_prefix.empty()) {
    for (std::size_t i = 0; i < cfg.dims.size(); ++i) {
      const std::size_t dim = cfg.dims[i];
      const std::uint64_t dim_seed = sweep_seed(cfg.seed, i);
      const bool gaussian = mode.kind == SweepKind::euclidean_gaussian;
      const DenseMatrix m = gaussian ? gaussian_matrix(cfg.n, dim, dim_seed)
                                     : peaked_softmax_matrix(cfg.n, dim, mode.sharpness, dim_seed);
      const std::string tag = "d" + std::to_string(dim);
      if (!cfg.matrix_dir.empty()) {
        write_matrix(m, std::filesystem::path(cfg.matrix_dir) / ("synth_" + tag + ".hubm"));
      }
      if (!cfg.hist_prefix.empty()) {
        HistogramOptions hopts;
        hopts.bins = cfg.bins;
        hopts.sample_pairs = cfg.sample_pairs;
        hopts.seed = dim_seed;
        TopkOptions topts = topk_options(cfg, gaussian);
        KOccurrence occ;
        ConcentrationDiag diag;
        if (gaussian) {
          hopts.exclude_self = true;
          diag = distance_histogram(m, m, Measure::euclidean, hopts);
          occ = topk_stream(m, m, Measure::euclidean, topts).occurrence;
        } else {
          diag = probability_histogram(m, hopts);
          occ = topk_probability(m, topts).occurrence;
        }
        write_text_file(cfg.hist_prefix + tag + "_dist.csv", histogram_csv(diag.histogram));
        write_text_file(cfg.hist_prefix + tag + "_kocc.csv", koccurrence_csv(occ));
      }
    }
  }

  if (!cfg.csv.empty()) emit(cfg.csv, sweep_csv(sweep), out);

  Json c = base_config(cfg);
  c["mode"] = cfg.mode;
  if (mode.kind == SweepKind::probability_peaked) c["sharpness"] = cfg.sharpness;
  c["n"] = cfg.n;
  c["dims"] = cfg.dims;
  c["measure"] = mode.kind == SweepKind::euclidean_gaussian ? "euclidean" : "probability";
  c["k"] = cfg.k;
  c["bins"] = cfg.bins;
  c["sample_pairs"] = cfg.sample_pairs;
  c["seed"] = cfg.seed;
  c["csv"] = cfg.csv;
  c["out"] = cfg.out;

  Json doc;
  doc["command"] = cfg.command;
  doc["sweep"] = to_json(sweep);
  doc["config"] = std::move(c);
  emit(cfg.out, dump_json(doc), out);
  return kExitOk;
}

void print_error(std::ostream& err, std::string_view kind, int code, const std::string& message) {
  Json line;
  line["error"] = {{"kind", kind}, {"exit_code", code}, {"message", message}};
  err << line.dump() << "\n";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage:
      return kExitUsage;
    case ErrorKind::data:
      return kExitData;
    case ErrorKind::numeric:
      return kExitNumeric;
  }
  return kExitData;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Measure, diagnose and mitigate hubness in representation spaces", "hubness"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Report path (stdout when omitted)");
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)")->capture_default_str();
    sub->add_option("--block-size", cfg.block_size, "Queries per scheduling block")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto hub_flags = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "Neighborhood size")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--hub-threshold", cfg.hub_threshold, "Minimum N_k of a hub")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--freq", cfg.freq, "Token frequency TSV");
    sub->add_option("--freq-label", cfg.freq_label, "Name of the frequency source");
    sub->add_option("--vocab", cfg.vocab, "Vocabulary JSON array");
    sub->add_flag("--all-tokens", cfg.all_tokens, "Correlate over every token, not only hubs");
    sub->add_option("--scatter", cfg.scatter, "CSV of token_id,token,n_k,count");
    sub->add_option("--kocc-csv", cfg.kocc_csv, "CSV of the N_k distribution");
  };
  const std::vector<std::string> self_modes{"auto", "on", "off"};

  auto* predictions = app.add_subcommand("predictions", "Prediction hubs under probability distance");
  predictions->add_option("--contexts", cfg.contexts, "Context representations (HUBM)");
  predictions->add_option("--unembed", cfg.unembed, "Unembedding matrix (HUBM)");
  predictions->add_option("--prob", cfg.prob, "Precomputed next-token probabilities (HUBM)");
  predictions->add_option("--gold", cfg.gold, "Gold next-token ids, one per line");
  hub_flags(predictions);
  common(predictions);

  auto add_pairwise_flags = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Matrix compared against itself (HUBM)");
    sub->add_option("--measure", cfg.measure, "euclidean | normalized-euclidean | softmax-dot")
        ->capture_default_str();
    sub->add_option("--exclude-self", cfg.exclude_self, "auto | on | off")
        ->check(CLI::IsMember(self_modes))
        ->capture_default_str();
    hub_flags(sub);
    common(sub);
  };
  auto* pairwise = app.add_subcommand("pairwise", "Hubness of a matrix against itself");
  add_pairwise_flags(pairwise);
  pairwise->add_option("--mitigate", cfg.mitigate, "mp | gcr");

  auto* mitigate = app.add_subcommand("mitigate", "Hubness before and after MP or GCR");
  add_pairwise_flags(mitigate);
  mitigate->add_option("--mitigate", cfg.mitigate, "mp | gcr")->required();

  auto* concentration = app.add_subcommand("concentration", "Distance distribution and relative variance");
  concentration->add_option("--queries", cfg.queries, "Query matrix (HUBM)");
  concentration->add_option("--candidates", cfg.candidates, "Candidate matrix (HUBM); defaults to the queries");
  concentration->add_option("--prob", cfg.prob, "Probability rows (HUBM)");
  concentration->add_option("--measure", cfg.measure)->capture_default_str();
  concentration->add_option("--exclude-self", cfg.exclude_self, "auto | on | off")
      ->check(CLI::IsMember(self_modes))
      ->capture_default_str();
  concentration->add_option("--bins", cfg.bins)->check(CLI::PositiveNumber)->capture_default_str();
  concentration->add_option("--sample-pairs", cfg.sample_pairs)->check(CLI::PositiveNumber)->capture_default_str();
  concentration->add_option("--seed", cfg.seed)->capture_default_str();
  concentration->add_option("--csv", cfg.csv, "Histogram CSV (bin_left,bin_right,count)");
  common(concentration);

  auto* uniformdist = app.add_subcommand("uniformdist", "Mean L2 distance of softmax rows to uniform");
  uniformdist->add_option("--prob", cfg.prob, "Probability rows (HUBM)");
  uniformdist->add_option("--input", cfg.input, "Matrix softmax-dotted against itself (HUBM)");
  uniformdist->add_option("--contexts", cfg.contexts, "Context representations (HUBM)");
  uniformdist->add_option("--unembed", cfg.unembed, "Unembedding matrix (HUBM)");
  common(uniformdist);

  auto* synth = app.add_subcommand("synth", "Synthetic dimension sweep");
  synth->add_option("--n", cfg.n, "Points (or probability rows) per dimension")->check(CLI::PositiveNumber)->capture_default_str();
  synth->add_option("--dims", cfg.dims, "Comma-separated ascending dimensions")->delimiter(',')->capture_default_str();
  synth->add_option("--mode", cfg.mode, "euclidean-gaussian | probability-peaked")->capture_default_str();
  synth->add_option("--sharpness", cfg.sharpness, "Logit scale for probability-peaked")->capture_default_str();
  synth->add_option("--k", cfg.k)->check(CLI::PositiveNumber)->capture_default_str();
  synth->add_option("--bins", cfg.bins)->check(CLI::PositiveNumber)->capture_default_str();
  synth->add_option("--sample-pairs", cfg.sample_pairs)->check(CLI::PositiveNumber)->capture_default_str();
  synth->add_option("--seed", cfg.seed)->capture_default_str();
  synth->add_option("--csv", cfg.csv, "Sweep CSV (dim,rv,kskew)");
  synth->add_option("--matrix-dir", cfg.matrix_dir, "Write each generated matrix as HUBM here");
  synth->add_option("--hist-prefix", cfg.hist_prefix, "Write <prefix>d<dim>_dist.csv and _kocc.csv");
  common(synth);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", kExitUsage, e.what());
    return kExitUsage;
  }

  const auto* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();

  try {
    if (cfg.command == "predictions") return run_predictions(cfg, out);
    if (cfg.command == "pairwise" || cfg.command == "mitigate") return run_pairwise(cfg, out);
    if (cfg.command == "concentration") return run_concentration(cfg, out);
    if (cfg.command == "uniformdist") return run_uniformdist(cfg, out);
    if (cfg.command == "synth") return run_synth(cfg, out);
    throw_usage("unknown command '" + cfg.command + "'");
  } catch (const Error& e) {
    const int code = exit_code(e.kind());
    print_error(err, to_string(e.kind()), code, e.what());
    return code;
  } catch (const std::exception& e) {
    print_error(err, "data", kExitData, e.what());
    return kExitData;
  }
}

}  // namespace hubness::cli
