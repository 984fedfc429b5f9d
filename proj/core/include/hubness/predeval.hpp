#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hubness/hubstats.hpp"
#include "hubness/matrix.hpp"
#include "hubness/neighbors.hpp"

namespace hubness {

// Argmax column of each row, ties to the lowest column. Works on logits or
// probabilities alike since softmax preserves order.
std::vector<std::size_t> top1_predict(const DenseMatrix& rows);

// First neighbor of each list; equals top1_predict on the softmaxed scores.
std::vector<std::size_t> top1_from_neighbors(std::span<const NeighborList> neighbors);

// Accuracy split by whether the *predicted* token is a hub. Empty partitions
// report no accuracy rather than zero.
struct AccuracyPartition {
  double all = 0.0;
  std::optional<double> hub;
  std::optional<double> non_hub;
  std::size_t total = 0;
  std::size_t hub_predicted = 0;
  std::size_t non_hub_predicted = 0;
  std::size_t hub_correct = 0;
  std::size_t non_hub_correct = 0;
};

// Throws Error(usage) on a length mismatch or empty input.
AccuracyPartition accuracy_partition(std::span<const std::size_t> predicted,
                                     std::span<const std::size_t> gold, const HubSet& hubs);

}  // namespace hubness
