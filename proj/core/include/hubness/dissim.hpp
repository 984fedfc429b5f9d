#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hubness/matrix.hpp"
#include "hubness/neighbors.hpp"

namespace hubness {

enum class Measure {
  euclidean,
  normalized_euclidean,
  softmax_dot,   // 1 - softmax(q . C^T)[j], softmax over all candidates
  probability,   // 1 - p(j | q) read from a probability row
};

std::string_view to_string(Measure measure);
// Accepts the CLI spellings: euclidean, normalized-euclidean, softmax-dot,
// probability. Throws Error(usage) otherwise.
Measure parse_measure(std::string_view text);

// Throws Error(usage) on length mismatch.
double euclidean(std::span<const double> a, std::span<const double> b);
// Euclidean distance between a/|a| and b/|b|. Throws Error(usage) on a
// zero-norm argument.
double normalized_euclidean(std::span<const double> a, std::span<const double> b);

// a / |a|, each coordinate divided by the Euclidean norm.
std::vector<double> unit_vector(std::span<const double> a);

// Row-wise softmax with the row maximum subtracted before exponentiation.
// Throws Error(numeric) if a row overflows.
void softmax_inplace(std::span<double> row);
DenseMatrix softmax_rows(const DenseMatrix& logits);

// 1 - prob_row[j]. Throws Error(usage) if j is out of range.
double probability_dissim(std::span<const double> prob_row, std::size_t j);

// Throws Error(data) unless the row is nonnegative and sums to 1 within
// `tolerance`.
void check_probability_row(std::span<const double> row, std::size_t row_index,
                           double tolerance = 1e-4);

// Per-row sums from which the probability-distance moments follow.
struct ProbabilityRowSummary {
  double dissim_sum = 0.0;  // sum_j (1 - p_j)
  double sq_dev_sum = 0.0;  // sum_j (p_j - 1/v)^2, squared L2 distance to uniform
};

ProbabilityRowSummary summarize_probability_row(std::span<const double> row);

struct ProbabilityStats {
  double mean = 0.0;               // mean of 1 - p over every (row, column)
  double variance = 0.0;           // mean over rows of (1/v) sum_j (p_j - 1/v)^2
  double relative_variance = 0.0;  // variance / mean^2
  double mean_l2_to_uniform = 0.0;
};

// Reduces per-row summaries in row order; `v` is the number of columns.
ProbabilityStats combine_probability_rows(std::span<const ProbabilityRowSummary> rows,
                                          std::size_t v);

// Mean and relative variance of the probability distance over all pairs.
// Throws Error(data) if a row does not sum to 1 within 1e-4.
ProbabilityStats prob_distance_stats(const DenseMatrix& prob);

struct TopkOptions {
  std::size_t k = 10;
  bool exclude_self = false;
  std::size_t block_size = 256;  // queries per scheduling unit
  unsigned threads = 1;
};

struct TopkResult {
  std::vector<NeighborList> neighbors;
  KOccurrence occurrence;
  // One entry per query for softmax-dot and probability measures, empty
  // otherwise; the softmax rows are never kept, so this is the only record
  // of them.
  std::vector<ProbabilityRowSummary> probability_rows;
};

// Exact k nearest candidates of every query, streamed one query block at a
// time so the full dissimilarity matrix is never materialized; each worker
// holds one candidate-length row. Neighbor lists are ordered by
// dissimilarity with ties on ascending candidate id. For softmax-dot and
// probability the order is by descending probability, which refines the
// order of 1 - p where that difference rounds away.
//
// `exclude_self` requires `queries` and `candidates` to be the same object.
// Measure::probability here means softmax-dot derived on the fly from
// (contexts, unembedding); use topk_probability for precomputed rows.
//
// Results are bitwise independent of block_size and threads.
TopkResult topk_stream(const DenseMatrix& queries, const DenseMatrix& candidates,
                       Measure measure, const TopkOptions& options);

// Probability rows as queries; candidate j is column j. `exclude_self`
// requires a square matrix (row i and column i are the same item).
TopkResult topk_probability(const DenseMatrix& prob, const TopkOptions& options);

// Queries are rows of a precomputed dissimilarity matrix; candidate j is
// column j. `exclude_self` requires a square matrix.
TopkResult topk_precomputed(const DenseMatrix& dissim, const TopkOptions& options);

}  // namespace hubness
