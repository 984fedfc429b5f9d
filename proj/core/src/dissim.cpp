#include "hubness/dissim.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "hubness/error.hpp"

namespace hubness {
namespace {

constexpr std::size_t kNoSelf = std::numeric_limits<std::size_t>::max();

// Squared-difference sums of one query against four consecutive candidates.
// Each sum runs over coordinates in index order, exactly like euclidean().
inline void squared_diff4(const double* q, const double* c0, std::size_t dim, double* out) {
  const double* c1 = c0 + dim;
  const double* c2 = c1 + dim;
  const double* c3 = c2 + dim;
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t t = 0; t < dim; ++t) {
    const double d0 = q[t] - c0[t];
    const double d1 = q[t] - c1[t];
    const double d2 = q[t] - c2[t];
    const double d3 = q[t] - c3[t];
    s0 += d0 * d0;
    s1 += d1 * d1;
    s2 += d2 * d2;
    s3 += d3 * d3;
  }
  out[0] = s0;
  out[1] = s1;
  out[2] = s2;
  out[3] = s3;
}

inline double squared_diff(const double* a, const double* b, std::size_t dim) {
  double s = 0.0;
  for (std::size_t t = 0; t < dim; ++t) {
    const double d = a[t] - b[t];
    s += d * d;
  }
  return s;
}

inline void dot4(const double* q, const double* c0, std::size_t dim, double* out) {
  const double* c1 = c0 + dim;
  const double* c2 = c1 + dim;
  const double* c3 = c2 + dim;
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t t = 0; t < dim; ++t) {
    s0 += q[t] * c0[t];
    s1 += q[t] * c1[t];
    s2 += q[t] * c2[t];
    s3 += q[t] * c3[t];
  }
  out[0] = s0;
  out[1] = s1;
  out[2] = s2;
  out[3] = s3;
}

inline double dot(const double* a, const double* b, std::size_t dim) {
  double s = 0.0;
  for (std::size_t t = 0; t < dim; ++t) s += a[t] * b[t];
  return s;
}

void euclidean_row(std::span<const double> query, const DenseMatrix& candidates,
                   std::span<double> out) {
  const std::size_t dim = candidates.cols();
  const std::size_t m = candidates.rows();
  const double* base = candidates.values().data();
  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) squared_diff4(query.data(), base + j * dim, dim, &out[j]);
  for (; j < m; ++j) out[j] = squared_diff(query.data(), base + j * dim, dim);
  for (double& v : out) v = std::sqrt(v);
}

void logits_row(std::span<const double> query, const DenseMatrix& candidates,
                std::span<double> out) {
  const std::size_t dim = candidates.cols();
  const std::size_t m = candidates.rows();
  const double* base = candidates.values().data();
  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) dot4(query.data(), base + j * dim, dim, &out[j]);
  for (; j < m; ++j) out[j] = dot(query.data(), base + j * dim, dim);
}

DenseMatrix normalize_rows(const DenseMatrix& m) {
  MatrixBuilder builder(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    double sq = 0.0;
    for (double x : row) sq += x * x;
    const double norm = std::sqrt(sq);
    if (norm == 0.0) throw_usage("normalized-euclidean: row " + std::to_string(r) + " has zero norm");
    auto out = builder.row(r);
    for (std::size_t t = 0; t < row.size(); ++t) out[t] = row[t] / norm;
  }
  return std::move(builder).build();
}

struct HeapEntry {
  double key;
  std::size_t id;
};

inline bool entry_less(const HeapEntry& a, const HeapEntry& b) {
  return a.key < b.key || (a.key == b.key && a.id < b.id);
}

// k smallest (key, id) pairs of `keys`, skipping `self`, ascending.
void select_topk(std::span<const double> keys, std::size_t k, std::size_t self,
                 std::vector<HeapEntry>& heap) {
  heap.clear();
  for (std::size_t j = 0; j < keys.size(); ++j) {
    if (j == self) continue;
    const double key = keys[j];
    if (heap.size() < k) {
      heap.push_back({key, j});
      std::push_heap(heap.begin(), heap.end(), entry_less);
    } else if (key < heap.front().key) {
      // Candidates arrive in ascending id, so an equal key never displaces.
      std::pop_heap(heap.begin(), heap.end(), entry_less);
      heap.back() = {key, j};
      std::push_heap(heap.begin(), heap.end(), entry_less);
    }
  }
  std::sort_heap(heap.begin(), heap.end(), entry_less);
}

enum class KeyKind {
  distance,          // key is the dissimilarity itself
  neg_probability,   // key is -p, dissimilarity is 1 - p
};

// Shared block-scheduled driver. `fill` computes the key row of one query
// and, for probability kinds, its row summary.
template <typename FillRow>
TopkResult run_topk(std::size_t num_queries, std::size_t num_candidates, bool with_self,
                    KeyKind kind, const TopkOptions& options, FillRow fill) {
  if (options.k == 0) throw_usage("k must be at least 1");
  const std::size_t eligible = num_candidates - (with_self && num_candidates > 0 ? 1 : 0);
  if (options.k > eligible) {
    throw_usage("k=" + std::to_string(options.k) + " exceeds the " + std::to_string(eligible) +
                " eligible candidates");
  }
  const std::size_t block = std::max<std::size_t>(options.block_size, 1);
  const std::size_t num_blocks = (num_queries + block - 1) / block;
  const unsigned threads = static_cast<unsigned>(
      std::clamp<std::size_t>(options.threads == 0 ? std::thread::hardware_concurrency() : options.threads,
                              1, std::max<std::size_t>(num_blocks, 1)));

  TopkResult result;
  result.neighbors.resize(num_queries);
  if (kind == KeyKind::neg_probability) result.probability_rows.resize(num_queries);

  std::vector<std::vector<std::uint64_t>> counts(threads,
                                                 std::vector<std::uint64_t>(num_candidates, 0));
  std::vector<std::exception_ptr> failures(threads);

  auto worker = [&](unsigned t) {
    try {
      std::vector<double> keys(num_candidates);
      std::vector<HeapEntry> heap;
      heap.reserve(options.k);
      for (std::size_t b = t; b < num_blocks; b += threads) {
        const std::size_t end = std::min(num_queries, (b + 1) * block);
        for (std::size_t q = b * block; q < end; ++q) {
          ProbabilityRowSummary* summary =
              kind == KeyKind::neg_probability ? &result.probability_rows[q] : nullptr;
          fill(q, std::span<double>(keys), summary);
          select_topk(keys, options.k, with_self ? q : kNoSelf, heap);
          NeighborList& list = result.neighbors[q];
          list.query = q;
          list.entries.resize(heap.size());
          for (std::size_t i = 0; i < heap.size(); ++i) {
            const double dissim = kind == KeyKind::distance ? heap[i].key : 1.0 + heap[i].key;
            list.entries[i] = {heap[i].id, dissim};
            ++counts[t][heap[i].id];
          }
        }
      }
    } catch (...) {
      failures[t] = std::current_exception();
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  result.occurrence.k = options.k;
  result.occurrence.num_queries = num_queries;
  result.occurrence.counts.assign(num_candidates, 0);
  for (const auto& local : counts) {
    for (std::size_t j = 0; j < num_candidates; ++j) result.occurrence.counts[j] += local[j];
  }
  return result;
}

}  // namespace

std::string_view to_string(Measure measure) {
  switch (measure) {
    case Measure::euclidean:
      return "euclidean";
    case Measure::normalized_euclidean:
      return "normalized-euclidean";
    case Measure::softmax_dot:
      return "softmax-dot";
    case Measure::probability:
      return "probability";
  }
  return "unknown";
}

Measure parse_measure(std::string_view text) {
  for (Measure m : {Measure::euclidean, Measure::normalized_euclidean, Measure::softmax_dot,
                    Measure::probability}) {
    if (text == to_string(m)) return m;
  }
  throw_usage("unknown measure '" + std::string(text) + "'");
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw_usage("euclidean: length mismatch " + std::to_string(a.size()) + " vs " +
                std::to_string(b.size()));
  }
  return std::sqrt(squared_diff(a.data(), b.data(), a.size()));
}

std::vector<double> unit_vector(std::span<const double> a) {
  double sq = 0.0;
  for (double x : a) sq += x * x;
  const double norm = std::sqrt(sq);
  if (norm == 0.0) throw_usage("normalized-euclidean: zero-norm vector");
  std::vector<double> out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) out[t] = a[t] / norm;
  return out;
}

double normalized_euclidean(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw_usage("normalized-euclidean: length mismatch " + std::to_string(a.size()) + " vs " +
                std::to_string(b.size()));
  }
  return euclidean(unit_vector(a), unit_vector(b));
}

void softmax_inplace(std::span<double> row) {
  if (row.empty()) return;
  const double max = *std::max_element(row.begin(), row.end());
  if (!std::isfinite(max)) throw_numeric("softmax: logit overflow");
  double sum = 0.0;
  for (double& x : row) {
    x = std::exp(x - max);
    sum += x;
  }
  for (double& x : row) x /= sum;
}

DenseMatrix softmax_rows(const DenseMatrix& logits) {
  MatrixBuilder builder(logits.rows(), logits.cols());
  for (std::size_t r = 0; r < logits.rows(); ++r) {
    auto out = builder.row(r);
    std::copy(logits.row(r).begin(), logits.row(r).end(), out.begin());
    softmax_inplace(out);
  }
  return std::move(builder).build();
}

double probability_dissim(std::span<const double> prob_row, std::size_t j) {
  if (j >= prob_row.size()) {
    throw_usage("probability_dissim: index " + std::to_string(j) + " out of range for " +
                std::to_string(prob_row.size()) + " columns");
  }
  return 1.0 - prob_row[j];
}

void check_probability_row(std::span<const double> row, std::size_t row_index, double tolerance) {
  double sum = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] < 0.0) {
      throw_data("probability row " + std::to_string(row_index) + " has negative entry at column " +
                 std::to_string(j));
    }
    sum += row[j];
  }
  if (!(std::abs(sum - 1.0) <= tolerance)) {
    throw_data("probability row " + std::to_string(row_index) + " sums to " +
               std::to_string(sum) + ", not 1");
  }
}

ProbabilityRowSummary summarize_probability_row(std::span<const double> row) {
  const double uniform = 1.0 / static_cast<double>(row.size());
  ProbabilityRowSummary s;
  for (double p : row) {
    s.dissim_sum += 1.0 - p;
    const double dev = p - uniform;
    s.sq_dev_sum += dev * dev;
  }
  return s;
}

ProbabilityStats combine_probability_rows(std::span<const ProbabilityRowSummary> rows,
                                          std::size_t v) {
  if (rows.empty() || v == 0) throw_usage("probability statistics need at least one row and column");
  double dissim = 0.0;
  double var = 0.0;
  double l2 = 0.0;
  for (const auto& r : rows) {
    dissim += r.dissim_sum;
    var += r.sq_dev_sum / static_cast<double>(v);
    l2 += std::sqrt(r.sq_dev_sum);
  }
  const double n = static_cast<double>(rows.size());
  ProbabilityStats stats;
  stats.mean = dissim / (n * static_cast<double>(v));
  stats.variance = var / n;
  stats.relative_variance = stats.mean > 0.0 ? stats.variance / (stats.mean * stats.mean) : 0.0;
  stats.mean_l2_to_uniform = l2 / n;
  return stats;
}

ProbabilityStats prob_distance_stats(const DenseMatrix& prob) {
  std::vector<ProbabilityRowSummary> rows(prob.rows());
  for (std::size_t r = 0; r < prob.rows(); ++r) {
    check_probability_row(prob.row(r), r);
    rows[r] = summarize_probability_row(prob.row(r));
  }
  return combine_probability_rows(rows, prob.cols());
}

TopkResult topk_stream(const DenseMatrix& queries, const DenseMatrix& candidates, Measure measure,
                       const TopkOptions& options) {
  const bool same = &queries == &candidates;
  if (options.exclude_self && !same) {
    throw_usage("exclude_self requires queries and candidates to be the same matrix");
  }
  if (queries.cols() != candidates.cols()) {
    throw_usage("shape mismatch: queries have " + std::to_string(queries.cols()) +
                " columns, candidates " + std::to_string(candidates.cols()));
  }
  const std::size_t m = candidates.rows();

  switch (measure) {
    case Measure::euclidean:
      return run_topk(queries.rows(), m, options.exclude_self, KeyKind::distance, options,
                      [&](std::size_t q, std::span<double> keys, ProbabilityRowSummary*) {
                        euclidean_row(queries.row(q), candidates, keys);
                      });
    case Measure::normalized_euclidean: {
      const DenseMatrix unit_candidates = normalize_rows(candidates);
      const DenseMatrix unit_queries_storage = same ? DenseMatrix{} : normalize_rows(queries);
      const DenseMatrix& unit_queries = same ? unit_candidates : unit_queries_storage;
      return run_topk(queries.rows(), m, options.exclude_self, KeyKind::distance, options,
                      [&](std::size_t q, std::span<double> keys, ProbabilityRowSummary*) {
                        euclidean_row(unit_queries.row(q), unit_candidates, keys);
                      });
    }
    case Measure::softmax_dot:
    case Measure::probability:
      return run_topk(queries.rows(), m, options.exclude_self, KeyKind::neg_probability, options,
                      [&](std::size_t q, std::span<double> keys, ProbabilityRowSummary* summary) {
                        logits_row(queries.row(q), candidates, keys);
                        softmax_inplace(keys);
                        *summary = summarize_probability_row(keys);
                        for (double& k : keys) k = -k;
                      });
  }
  throw_usage("unknown measure");
}

TopkResult topk_probability(const DenseMatrix& prob, const TopkOptions& options) {
  if (options.exclude_self && prob.rows() != prob.cols()) {
    throw_usage("exclude_self on probability rows requires a square matrix");
  }
  for (std::size_t r = 0; r < prob.rows(); ++r) check_probability_row(prob.row(r), r);
  return run_topk(prob.rows(), prob.cols(), options.exclude_self, KeyKind::neg_probability, options,
                  [&](std::size_t q, std::span<double> keys, ProbabilityRowSummary* summary) {
                    const auto row = prob.row(q);
                    *summary = summarize_probability_row(row);
                    for (std::size_t j = 0; j < row.size(); ++j) keys[j] = -row[j];
                  });
}

TopkResult topk_precomputed(const DenseMatrix& dissim, const TopkOptions& options) {
  if (options.exclude_self && dissim.rows() != dissim.cols()) {
    throw_usage("exclude_self on a dissimilarity matrix requires a square matrix");
  }
  return run_topk(dissim.rows(), dissim.cols(), options.exclude_self, KeyKind::distance, options,
                  [&](std::size_t q, std::span<double> keys, ProbabilityRowSummary*) {
                    const auto row = dissim.row(q);
                    std::copy(row.begin(), row.end(), keys.begin());
                  });
}

}  // namespace hubness
