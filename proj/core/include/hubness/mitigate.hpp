#pragma once

#include <cstddef>
#include <string_view>

#include "hubness/dissim.hpp"
#include "hubness/matrix.hpp"

namespace hubness {

enum class Mitigation {
  mutual_proximity,
  global_rank,
};

std::string_view to_string(Mitigation m);
// "mp" or "gcr"; throws Error(usage) otherwise.
Mitigation parse_mitigation(std::string_view text);

// Full n x n dissimilarity of a matrix against itself. Only for small n:
// memory is n^2 doubles.
DenseMatrix pairwise_dissimilarity(const DenseMatrix& points, Measure measure);

// n x n secondary dissimilarity; row = query, column = candidate. The
// diagonal is 0 and carries no meaning.
struct SecondaryDissim {
  Mitigation kind = Mitigation::mutual_proximity;
  DenseMatrix values;

  std::size_t n() const noexcept { return values.rows(); }
};

// Empirical Mutual Proximity, returned as 1 - MP with
//   MP(x, y) = |{j != x, y : d(x, j) > d(x, y)}| / (n - 2)
//            * |{j != x, y : d(y, j) > d(y, x)}| / (n - 2).
// Strict inequalities: tied distances count as not farther. Throws
// Error(usage) for n < 3 or a non-square input, Error(data) for a nonzero
// diagonal.
SecondaryDissim mutual_proximity(const DenseMatrix& dist);

// Globally Corrected Rank: value(x, y) is the 1-based position of x in y's
// own neighbor ranking (ascending d(y, .), y itself excluded, ties by
// ascending id). Throws Error(usage) for n < 2 or a non-square input.
SecondaryDissim global_rank(const DenseMatrix& dist);

SecondaryDissim apply_mitigation(Mitigation kind, const DenseMatrix& dist);

}  // namespace hubness
