#include "hubness/predeval.hpp"

#include <string>
#include <unordered_set>

#include "hubness/error.hpp"

namespace hubness {

std::vector<std::size_t> top1_predict(const DenseMatrix& rows) {
  if (rows.cols() == 0) throw_usage("top1_predict needs at least one column");
  std::vector<std::size_t> out(rows.rows());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    const auto row = rows.row(r);
    std::size_t best = 0;
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (row[j] > row[best]) best = j;
    }
    out[r] = best;
  }
  return out;
}

std::vector<std::size_t> top1_from_neighbors(std::span<const NeighborList> neighbors) {
  std::vector<std::size_t> out;
  out.reserve(neighbors.size());
  for (const auto& list : neighbors) {
    if (list.entries.empty()) throw_usage("empty neighbor list");
    out.push_back(list.entries.front().candidate);
  }
  return out;
}

AccuracyPartition accuracy_partition(std::span<const std::size_t> predicted,
                                     std::span<const std::size_t> gold, const HubSet& hubs) {
  if (predicted.size() != gold.size()) {
    throw_usage("accuracy: " + std::to_string(predicted.size()) + " predictions vs " +
                std::to_string(gold.size()) + " gold labels");
  }
  if (predicted.empty()) throw_usage("accuracy needs at least one prediction");

  std::unordered_set<std::size_t> hub_ids;
  for (const auto& h : hubs.members) hub_ids.insert(h.id);

  AccuracyPartition acc;
  acc.total = predicted.size();
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const bool correct = predicted[i] == gold[i];
    if (hub_ids.contains(predicted[i])) {
      ++acc.hub_predicted;
      acc.hub_correct += correct;
    } else {
      ++acc.non_hub_predicted;
      acc.non_hub_correct += correct;
    }
  }
  acc.all = static_cast<double>(acc.hub_correct + acc.non_hub_correct) / static_cast<double>(acc.total);
  if (acc.hub_predicted > 0) {
    acc.hub = static_cast<double>(acc.hub_correct) / static_cast<double>(acc.hub_predicted);
  }
  if (acc.non_hub_predicted > 0) {
    acc.non_hub = static_cast<double>(acc.non_hub_correct) / static_cast<double>(acc.non_hub_predicted);
  }
  return acc;
}

}  // namespace hubness
