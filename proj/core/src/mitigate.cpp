#include "hubness/mitigate.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "hubness/error.hpp"

namespace hubness {
namespace {

void require_square(const DenseMatrix& dist, std::size_t min_n, const char* what) {
  if (dist.rows() != dist.cols()) {
    throw_usage(std::string(what) + " needs a square dissimilarity matrix");
  }
  if (dist.rows() < min_n) {
    throw_usage(std::string(what) + " needs n >= " + std::to_string(min_n));
  }
}

}  // namespace

std::string_view to_string(Mitigation m) {
  return m == Mitigation::mutual_proximity ? "mp" : "gcr";
}

Mitigation parse_mitigation(std::string_view text) {
  if (text == "mp") return Mitigation::mutual_proximity;
  if (text == "gcr") return Mitigation::global_rank;
  throw_usage("unknown mitigation '" + std::string(text) + "' (expected mp or gcr)");
}

DenseMatrix pairwise_dissimilarity(const DenseMatrix& points, Measure measure) {
  const std::size_t n = points.rows();
  MatrixBuilder out(n, n);
  switch (measure) {
    case Measure::euclidean:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          out(i, j) = out(j, i) = euclidean(points.row(i), points.row(j));
        }
      }
      break;
    case Measure::normalized_euclidean: {
      std::vector<std::vector<double>> unit(n);
      for (std::size_t i = 0; i < n; ++i) unit[i] = unit_vector(points.row(i));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) out(i, j) = out(j, i) = euclidean(unit[i], unit[j]);
      }
      break;
    }
    case Measure::softmax_dot:
    case Measure::probability:
      // Asymmetric: row i is 1 - softmax(x_i . X^T), self included in the
      // softmax; the diagonal is then zeroed for the secondary transforms.
      for (std::size_t i = 0; i < n; ++i) {
        auto row = out.row(i);
        for (std::size_t j = 0; j < n; ++j) {
          double s = 0.0;
          const auto a = points.row(i);
          const auto b = points.row(j);
          for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
          row[j] = s;
        }
        softmax_inplace(row);
        for (std::size_t j = 0; j < n; ++j) row[j] = i == j ? 0.0 : 1.0 - row[j];
      }
      break;
  }
  return std::move(out).build();
}

SecondaryDissim mutual_proximity(const DenseMatrix& dist) {
  require_square(dist, 3, "mutual proximity");
  const std::size_t n = dist.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (dist(i, i) != 0.0) throw_data("mutual proximity: nonzero diagonal at " + std::to_string(i));
  }

  // farther(x, y) = |{j != x, y : d(x, j) > d(x, y)}|, via each sorted row.
  // j = y never counts (strict), j = x counts only when d(x, y) < 0.
  MatrixBuilder farther(n, n);
  std::vector<double> sorted(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto row = dist.row(x);
    std::copy(row.begin(), row.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      const auto greater = static_cast<std::size_t>(
          sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), row[y]));
      farther(x, y) = static_cast<double>(greater - (0.0 > row[y] ? 1 : 0));
    }
  }
  const DenseMatrix counts = std::move(farther).build();

  const double denom = static_cast<double>(n - 2);
  MatrixBuilder out(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const double mp = (counts(x, y) / denom) * (counts(y, x) / denom);
      out(x, y) = out(y, x) = 1.0 - mp;
    }
  }
  return {Mitigation::mutual_proximity, std::move(out).build()};
}

SecondaryDissim global_rank(const DenseMatrix& dist) {
  require_square(dist, 2, "globally corrected rank");
  const std::size_t n = dist.rows();
  MatrixBuilder out(n, n);
  std::vector<std::size_t> order(n);
  for (std::size_t y = 0; y < n; ++y) {
    const auto row = dist.row(y);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return row[a] < row[b]; });
    std::size_t rank = 0;
    for (std::size_t x : order) {
      if (x == y) continue;
      out(x, y) = static_cast<double>(++rank);
    }
  }
  return {Mitigation::global_rank, std::move(out).build()};
}

SecondaryDissim apply_mitigation(Mitigation kind, const DenseMatrix& dist) {
  return kind == Mitigation::mutual_proximity ? mutual_proximity(dist) : global_rank(dist);
}

}  // namespace hubness
