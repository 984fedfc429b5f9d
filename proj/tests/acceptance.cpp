// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "hubness/dissim.hpp"
#include "hubness/error.hpp"
#include "hubness/freqcorr.hpp"
#include "hubness/hubstats.hpp"
#include "hubness/matrixio.hpp"
#include "hubness/mitigate.hpp"
#include "hubness/synth.hpp"
#include "oracles.hpp"

using namespace hubness;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [violated]");
  }
};

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 10,000 standard Gaussian points, Euclidean, k = 10, self excluded. Same
// seeds as `hubness synth --dims 3,300 --seed 0`.
Verdict gaussian_concentration() {
  constexpr std::size_t n = 10000;
  constexpr std::uint64_t seed = 0;
  const std::vector<std::size_t> dims{3, 300};
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const DenseMatrix pts = gaussian_matrix(n, dims[i], sweep_seed(seed, i));
    TopkOptions topk;
    topk.k = 10;
    topk.exclude_self = true;
    const TopkResult r = topk_stream(pts, pts, Measure::euclidean, topk);
    const double kskew = skewness(r.occurrence);
    if (dims[i] == 3) {
      v.check(kskew >= -0.5 && kskew <= 1.0, "3-d k-skew " + fmt(kskew, 4) + " in [-0.5, 1.0]");
      continue;
    }
    v.check(kskew > 5.0, "300-d k-skew " + fmt(kskew, 4) + " > 5");
    // Exact minimum over all pairs: the smallest first-neighbor distance.
    double min_dist = INFINITY;
    for (const auto& list : r.neighbors) min_dist = std::min(min_dist, list.entries.front().dissim);
    v.check(min_dist > 15.0, "300-d min pairwise distance " + fmt(min_dist, 4) + " > 15");
    HistogramOptions hist;
    hist.bins = 100;
    hist.sample_pairs = 1'000'000;
    hist.seed = sweep_seed(seed, i);
    hist.exclude_self = true;
    const ConcentrationDiag diag = distance_histogram(pts, pts, Measure::euclidean, hist);
    const auto& h = diag.histogram;
    const std::size_t mode = static_cast<std::size_t>(
        std::max_element(h.counts.begin(), h.counts.end()) - h.counts.begin());
    const double center = (h.edges[mode] + h.edges[mode + 1]) / 2.0;
    v.check(center >= 23.0 && center <= 27.0, "300-d distance mode " + fmt(center, 4) + " in [23, 27]");
  }
  const double elapsed = seconds_since(t0);
  v.check(elapsed < 300.0, "runtime " + fmt(elapsed, 3) + " s < 300 s single-threaded");
  return v;
}

Verdict probability_distance_theory() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  // Mean of 1 - p is 1 - 1/v for every valid probability matrix.
  std::mt19937_64 rng(31);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t cols = 2 + rng() % 2000;
    const std::size_t rows = 1 + rng() % 50;
    const double sharpness = std::uniform_real_distribution<double>(0.0, 20.0)(rng);
    const DenseMatrix p = peaked_softmax_matrix(rows, cols, sharpness, rng());
    const double expected = 1.0 - 1.0 / static_cast<double>(cols);
    worst = std::max(worst, std::abs(prob_distance_stats(p).mean - expected) / expected);
  }
  v.check(worst <= 1e-9, "mean = 1 - 1/v, worst relative error " + fmt(worst, 3) + " <= 1e-9");

  bool uniform_zero = true;
  for (std::size_t cols : {2u, 10u, 1000u, 50000u}) {
    const DenseMatrix p = peaked_softmax_matrix(3, cols, 0.0, 1);
    uniform_zero = uniform_zero && prob_distance_stats(p).relative_variance == 0.0;
  }
  v.check(uniform_zero, "uniform rows give RV = 0 exactly");

  for (std::size_t cols : {10u, 100u, 1000u}) {
    const DenseMatrix p = peaked_softmax_matrix(1000, cols, 2.0, 7);
    const double rv = prob_distance_stats(p).relative_variance;
    v.check(rv > 0.01, "sharpness 2, v=" + std::to_string(cols) + ": RV " + fmt(rv, 4) + " > 0.01");
  }
  v.check(seconds_since(t0) < 60.0, "runtime " + fmt(seconds_since(t0), 3) + " s");
  return v;
}

oracle::Kind oracle_kind(Measure m) {
  switch (m) {
    case Measure::euclidean: return oracle::Kind::euclidean;
    case Measure::normalized_euclidean: return oracle::Kind::normalized_euclidean;
    case Measure::softmax_dot: return oracle::Kind::softmax_dot;
    case Measure::probability: return oracle::Kind::probability;
  }
  return oracle::Kind::euclidean;
}

std::vector<Hub> naive_hubs(const std::vector<std::uint64_t>& counts, std::uint64_t threshold) {
  std::vector<Hub> hubs;
  for (std::size_t id = 0; id < counts.size(); ++id) {
    if (counts[id] >= threshold) hubs.push_back({id, counts[id]});
  }
  std::sort(hubs.begin(), hubs.end(), [](const Hub& a, const Hub& b) {
    return a.n_k != b.n_k ? a.n_k > b.n_k : a.id < b.id;
  });
  return hubs;
}

Verdict streaming_matches_brute_force() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2718);
  std::size_t runs = 0, mismatches = 0;
  for (int instance = 0; instance < 50; ++instance) {
    const std::size_t n = 2 + rng() % 499;
    const std::size_t d = 1 + rng() % 64;
    DenseMatrix pts = oracle::random_matrix(rng, n, d);
    if (instance % 5 == 0) {
      // Coarse grid coordinates force many exact distance ties.
      std::vector<double> vals(pts.values().begin(), pts.values().end());
      for (double& x : vals) x = std::round(x);
      // normalized-euclidean needs nonzero rows.
      for (std::size_t r = 0; r < n; ++r) {
        if (std::all_of(vals.begin() + r * d, vals.begin() + (r + 1) * d, [](double x) { return x == 0.0; })) {
          vals[r * d] = 1.0;
        }
      }
      pts = DenseMatrix(n, d, std::move(vals));
    }
    const DenseMatrix prob = softmax_rows(oracle::random_matrix(rng, n, n, 3.0));
    for (Measure m : {Measure::euclidean, Measure::normalized_euclidean, Measure::softmax_dot,
                      Measure::probability}) {
      const DenseMatrix& input = m == Measure::probability ? prob : pts;
      for (bool exclude : {false, true}) {
        TopkOptions opts;
        opts.k = 1 + rng() % std::min<std::size_t>(n - 1, 20);
        opts.exclude_self = exclude;
        opts.block_size = 1 + rng() % 128;
        opts.threads = 1 + static_cast<unsigned>(rng() % 4);
        const TopkResult r = m == Measure::probability ? topk_probability(input, opts)
                                                       : topk_stream(input, input, m, opts);
        const KOccurrence occ = k_occurrence(r.neighbors, n);
        const std::uint64_t threshold = 1 + rng() % (2 * opts.k);
        const HubSet hubs = detect_hubs(occ, threshold);

        const auto want = oracle::naive_topk(oracle::full_matrix(input, input, oracle_kind(m)), opts.k, exclude);
        const auto want_counts = oracle::naive_counts(want, n);
        bool same = occ.counts == want_counts && r.occurrence.counts == want_counts &&
                    hubs.members == naive_hubs(want_counts, threshold);
        for (std::size_t q = 0; same && q < n; ++q) {
          for (std::size_t j = 0; j < opts.k; ++j) {
            same = same && r.neighbors[q].entries[j].candidate == want[q].entries[j].candidate;
          }
        }
        ++runs;
        mismatches += !same;
      }
    }
  }
  v.check(mismatches == 0, std::to_string(runs) + " runs over 50 instances, " + std::to_string(mismatches) +
                               " mismatches in indices, counts or hubs");
  const double elapsed = seconds_since(t0);
  v.check(elapsed < 120.0, "runtime " + fmt(elapsed, 3) + " s < 120 s");
  return v;
}

Verdict uniform_distance_closed_forms() {
  Verdict v;
  constexpr std::size_t cols = 50000;
  const DenseMatrix uniform = peaked_softmax_matrix(4, cols, 0.0, 0);
  const double u = mean_l2_to_uniform(uniform);
  v.check(std::abs(u) <= 1e-12, "uniform rows at v=50000: " + fmt(u, 3));

  std::vector<double> vals(4 * cols, 0.0);
  for (std::size_t r = 0; r < 4; ++r) vals[r * cols + (r * 9973) % cols] = 1.0;
  const DenseMatrix onehot(4, cols, std::move(vals));
  const double got = mean_l2_to_uniform(onehot);
  const double want = std::sqrt(1.0 - 1.0 / static_cast<double>(cols));
  v.check(std::abs(got - want) <= 1e-12,
          "one-hot rows at v=50000: |" + fmt(got, 15) + " - sqrt(1 - 1/v)| = " + fmt(std::abs(got - want), 3));
  return v;
}

Verdict statistics_match_oracles() {
  Verdict v;
  std::mt19937_64 rng(1618);
  double skew_err = 0, rho_err = 0;
  std::size_t rank_mismatch = 0, ties = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + rng() % 300;
    auto x = oracle::random_values(rng, n);
    auto y = oracle::random_values(rng, n);
    if (std::all_of(x.begin(), x.end(), [&](double a) { return a == x[0]; })) x[0] += 1.0;
    if (std::all_of(y.begin(), y.end(), [&](double a) { return a == y[0]; })) y[0] += 1.0;
    ties += std::set<double>(x.begin(), x.end()).size() < n;
    skew_err = std::max(skew_err, std::abs(skewness(x) - oracle::skew(x)));
    rho_err = std::max(rho_err, std::abs(spearman(x, y) - oracle::spearman(x, y)));
    rank_mismatch += average_ranks(x) != oracle::ranks(x);
  }
  v.check(skew_err <= 1e-12, "skewness max error " + fmt(skew_err, 3));
  v.check(rho_err <= 1e-12, "spearman max error " + fmt(rho_err, 3));
  v.check(rank_mismatch == 0, "average_ranks mismatches " + std::to_string(rank_mismatch));
  v.check(ties > 100, std::to_string(ties) + " of 1000 inputs contain ties");
  const std::vector<double> a{1, 2, 3}, rev{3, 2, 1};
  const double s = skewness(a);
  v.check(s == 0.0, "skewness([1,2,3]) = " + fmt(s));
  const double r = spearman(a, rev);
  v.check(r == -1.0, "spearman reversal = " + fmt(r));
  return v;
}

Verdict mitigation_reduces_hubness() {
  Verdict v;
  std::string skews;
  bool all_reduced = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const DenseMatrix pts = gaussian_matrix(2000, 300, seed);
    const DenseMatrix dist = pairwise_dissimilarity(pts, Measure::euclidean);
    TopkOptions opts;
    opts.k = 10;
    opts.exclude_self = true;
    const double before = skewness(topk_stream(pts, pts, Measure::euclidean, opts).occurrence);
    const double after = skewness(topk_precomputed(mutual_proximity(dist).values, opts).occurrence);
    all_reduced = all_reduced && after < before;
    skews += (seed > 1 ? ", " : "") + fmt(before, 3) + "->" + fmt(after, 3);
  }
  v.check(all_reduced, "MP k-skew before->after over 5 seeds: " + skews);

  // Each candidate's ranking of the other points is a permutation of 1..n-1.
  std::mt19937_64 rng(99);
  std::size_t bad = 0, lists = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 300;
    const DenseMatrix pts = oracle::random_matrix(rng, n, 1 + rng() % 30);
    const SecondaryDissim g = global_rank(pairwise_dissimilarity(pts, Measure::euclidean));
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<double> ranks;
      for (std::size_t x = 0; x < n; ++x) {
        if (x != y) ranks.push_back(g.values(x, y));
      }
      std::sort(ranks.begin(), ranks.end());
      for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] != static_cast<double>(i + 1)) {
          ++bad;
          break;
        }
      }
      ++lists;
    }
  }
  v.check(bad == 0, "global_rank: " + std::to_string(lists - bad) + "/" + std::to_string(lists) +
                        " rank lists are permutations of 1..n-1");
  return v;
}

Verdict cli_is_deterministic() {
  Verdict v;
  const fs::path dir = fs::temp_directory_path() / "hubness_acceptance";
  fs::create_directories(dir);
  std::mt19937_64 rng(5);
  const std::string x = (dir / "x.hubm").string();
  const std::string c = (dir / "c.hubm").string();
  const std::string u = (dir / "u.hubm").string();
  const std::string p = (dir / "p.hubm").string();
  const std::string gold = (dir / "gold.txt").string();
  const std::string freq = (dir / "freq.tsv").string();
  write_matrix(oracle::random_matrix(rng, 600, 40), x);
  write_matrix(oracle::random_matrix(rng, 700, 32), c);
  write_matrix(oracle::random_matrix(rng, 500, 32), u);
  write_matrix(peaked_softmax_matrix(400, 500, 3.0, 8), p);
  std::string g, f;
  for (int i = 0; i < 700; ++i) g += std::to_string(rng() % 500) + "\n";
  for (int i = 0; i < 500; ++i) f += std::to_string(i) + "\t" + std::to_string(rng() % 10000) + "\n";
  write_text_file(gold, g);
  write_text_file(freq, f);

  const std::vector<std::vector<std::string>> configs{
      {"predictions", "--contexts", c, "--unembed", u, "--gold", gold, "--freq", freq, "--hub-threshold", "20"},
      {"predictions", "--prob", p, "--hub-threshold", "15", "--freq", freq, "--all-tokens"},
      {"pairwise", "--input", x, "--measure", "euclidean", "--hub-threshold", "20"},
      {"pairwise", "--input", x, "--measure", "normalized-euclidean", "--hub-threshold", "20"},
      {"pairwise", "--input", x, "--measure", "softmax-dot", "--hub-threshold", "20"},
      {"mitigate", "--input", x, "--mitigate", "mp", "--hub-threshold", "20"},
      {"mitigate", "--input", x, "--mitigate", "gcr", "--hub-threshold", "20"},
      {"concentration", "--queries", x, "--sample-pairs", "50000", "--seed", "3"},
      {"concentration", "--queries", c, "--candidates", u, "--measure", "softmax-dot"},
      {"uniformdist", "--contexts", c, "--unembed", u},
      {"synth", "--n", "500", "--dims", "3,30,100", "--sample-pairs", "20000", "--seed", "4"},
      {"synth", "--n", "300", "--dims", "10,50", "--mode", "probability-peaked"},
  };
  std::size_t identical = 0;
  for (const auto& base : configs) {
    std::vector<std::string> outputs;
    for (const std::string threads : {"1", "8", "1", "8"}) {
      auto args = base;
      args.insert(args.end(), {"--threads", threads, "--block-size", threads == "1" ? "256" : "13"});
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      outputs.push_back(code == 0 ? out.str() : "exit " + std::to_string(code) + ": " + err.str());
    }
    const bool ok = outputs.front().rfind("exit ", 0) != 0 &&
                    std::all_of(outputs.begin(), outputs.end(), [&](const std::string& o) { return o == outputs.front(); });
    identical += ok;
    if (!ok) v.check(false, base.front() + " run differs or failed: " + outputs.front().substr(0, 200));
  }
  v.check(identical == configs.size(), std::to_string(identical) + "/" + std::to_string(configs.size()) +
                                           " configurations byte-identical over 4 runs at 1 and 8 threads");
  fs::remove_all(dir);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"gaussian-concentration", gaussian_concentration},
      {"probability-distance-theory", probability_distance_theory},
      {"streaming-oracle-equivalence", streaming_matches_brute_force},
      {"l2-to-uniform-closed-forms", uniform_distance_closed_forms},
      {"statistics-oracles", statistics_match_oracles},
      {"mitigation", mitigation_reduces_hubness},
      {"cli-determinism", cli_is_deterministic},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str());
    std::fflush(stdout);
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
