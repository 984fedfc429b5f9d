#pragma once

// Brute-force reference implementations for the test suites. These are
// written independently of core/ and only share its public data types.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "hubness/matrix.hpp"
#include "hubness/neighbors.hpp"

namespace hubness::oracle {

enum class Kind { euclidean, normalized_euclidean, softmax_dot, probability };

inline double euclid(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(std::inner_product(a.begin(), a.end(), b.begin(), 0.0, std::plus<>(),
                                      [](double x, double y) { return (x - y) * (x - y); }));
}

inline std::vector<double> unit(std::span<const double> a) {
  const double norm = std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
  std::vector<double> out;
  for (double x : a) out.push_back(x / norm);
  return out;
}

// Full dissimilarity matrix plus the sort key: the dissimilarity itself for
// distances, -p for the probability kinds (dissimilarity 1 - p).
struct Full {
  std::vector<std::vector<double>> key;
  std::vector<std::vector<double>> dissim;
};

inline Full full_matrix(const DenseMatrix& q, const DenseMatrix& c, Kind kind) {
  Full f;
  const std::size_t nq = q.rows();
  const std::size_t nc = kind == Kind::probability ? q.cols() : c.rows();
  f.key.assign(nq, std::vector<double>(nc));
  f.dissim.assign(nq, std::vector<double>(nc));
  for (std::size_t i = 0; i < nq; ++i) {
    if (kind == Kind::euclidean || kind == Kind::normalized_euclidean) {
      for (std::size_t j = 0; j < nc; ++j) {
        const double d = kind == Kind::euclidean ? euclid(q.row(i), c.row(j))
                                                 : euclid(unit(q.row(i)), unit(c.row(j)));
        f.key[i][j] = f.dissim[i][j] = d;
      }
      continue;
    }
    std::vector<double> p(nc);
    if (kind == Kind::probability) {
      for (std::size_t j = 0; j < nc; ++j) p[j] = q(i, j);
    } else {
      for (std::size_t j = 0; j < nc; ++j) {
        p[j] = std::inner_product(q.row(i).begin(), q.row(i).end(), c.row(j).begin(), 0.0);
      }
      const double mx = *std::max_element(p.begin(), p.end());
      double s = 0.0;
      for (double& x : p) {
        x = std::exp(x - mx);
        s += x;
      }
      for (double& x : p) x /= s;
    }
    for (std::size_t j = 0; j < nc; ++j) {
      f.key[i][j] = -p[j];
      f.dissim[i][j] = 1.0 - p[j];
    }
  }
  return f;
}

// Sort every candidate, keep the first k.
inline std::vector<NeighborList> naive_topk(const Full& f, std::size_t k, bool exclude_self) {
  std::vector<NeighborList> out(f.key.size());
  for (std::size_t i = 0; i < f.key.size(); ++i) {
    std::vector<std::size_t> ids;
    for (std::size_t j = 0; j < f.key[i].size(); ++j) {
      if (!(exclude_self && i == j)) ids.push_back(j);
    }
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      if (f.key[i][a] != f.key[i][b]) return f.key[i][a] < f.key[i][b];
      return a < b;
    });
    out[i].query = i;
    for (std::size_t r = 0; r < k; ++r) out[i].entries.push_back({ids[r], f.dissim[i][ids[r]]});
  }
  return out;
}

inline std::vector<std::uint64_t> naive_counts(const std::vector<NeighborList>& lists,
                                               std::size_t num_candidates) {
  std::vector<std::uint64_t> counts(num_candidates, 0);
  for (std::size_t c = 0; c < num_candidates; ++c) {
    for (const auto& l : lists) {
      for (const auto& e : l.entries) counts[c] += e.candidate == c;
    }
  }
  return counts;
}

// Skewness via raw moments in long double.
inline double skew(const std::vector<double>& x) {
  long double n = x.size(), s1 = 0, s2 = 0, s3 = 0;
  for (double v : x) s1 += v;
  const long double mu = s1 / n;
  for (double v : x) {
    s2 += (v - mu) * (v - mu);
    s3 += (v - mu) * (v - mu) * (v - mu);
  }
  const long double m2 = s2 / n;
  const long double m3 = s3 / n;
  return static_cast<double>(m3 / std::pow(m2, 1.5L));
}

// rank_i = 1 + #{less} + (#{equal} - 1) / 2, O(n^2).
inline std::vector<double> ranks(const std::vector<double>& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t less = 0, equal = 0;
    for (double v : x) {
      less += v < x[i];
      equal += v == x[i];
    }
    r[i] = 1.0 + static_cast<double>(less) + (static_cast<double>(equal) - 1.0) / 2.0;
  }
  return r;
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  long double n = a.size(), ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  long double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return static_cast<double>(sab / std::sqrt(saa * sbb));
}

inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  return pearson(ranks(a), ranks(b));
}

// Integer-valued data with many ties, or continuous data, chosen per draw.
inline std::vector<double> random_values(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> v(n);
  if (rng() % 2 == 0) {
    std::uniform_int_distribution<int> d(0, static_cast<int>(std::max<std::size_t>(2, n / 3)));
    for (double& x : v) x = d(rng);
  } else {
    std::normal_distribution<double> d(0.0, 1.0 + static_cast<double>(rng() % 100));
    for (double& x : v) x = d(rng);
  }
  return v;
}

inline DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                 double scale = 1.0) {
  std::normal_distribution<double> d(0.0, scale);
  std::vector<double> v(rows * cols);
  for (double& x : v) x = d(rng);
  return DenseMatrix(rows, cols, std::move(v));
}

}  // namespace hubness::oracle
