#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace hubness {

struct Neighbor {
  std::size_t candidate = 0;
  double dissim = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Top-k candidates of one query, ascending by dissimilarity, ties by
// ascending candidate id.
struct NeighborList {
  std::size_t query = 0;
  std::vector<Neighbor> entries;

  friend bool operator==(const NeighborList&, const NeighborList&) = default;
};

// N_k: how many queries list each candidate among their k nearest.
struct KOccurrence {
  std::vector<std::uint64_t> counts;
  std::size_t k = 0;
  std::size_t num_queries = 0;

  std::uint64_t total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  }

  friend bool operator==(const KOccurrence&, const KOccurrence&) = default;
};

}  // namespace hubness
