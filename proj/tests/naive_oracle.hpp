// Test-only reference implementations. Everything here evaluates the
// definitions directly from the feature matrix with plain loops and shares no
// code with the library paths it is used to check.
#pragma once

#include <cmath>
#include <vector>

#include "kherd/dataset.hpp"
#include "kherd/rng.hpp"

namespace naive {

using kherd::FeatureMatrix;
using kherd::Index;

inline double gaussian_k(const FeatureMatrix& f, Index i, Index j,
                         double sigma) {
  double sq = 0.0;
  for (Index c = 0; c < f.cols(); ++c) {
    const double diff = f(i, c) - f(j, c);
    sq += diff * diff;
  }
  return std::exp(-sq / (sigma * sigma));
}

inline double kbar(const FeatureMatrix& f, double sigma) {
  const Index n = f.rows();
  double acc = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) acc += gaussian_k(f, i, j, sigma);
  }
  return acc / (static_cast<double>(n) * static_cast<double>(n));
}

// mu(x_i) = (1/n) sum_j k(x_j, x_i)
inline double mu_at(const FeatureMatrix& f, Index i, double sigma) {
  double acc = 0.0;
  for (Index j = 0; j < f.rows(); ++j) acc += gaussian_k(f, j, i, sigma);
  return acc / static_cast<double>(f.rows());
}

inline double avg_similarity(const FeatureMatrix& f,
                             const std::vector<Index>& idx, double sigma) {
  double acc = 0.0;
  for (const Index i : idx) {
    for (const Index j : idx) acc += gaussian_k(f, i, j, sigma);
  }
  const double m = static_cast<double>(idx.size());
  return acc / (m * m);
}

// Straight three-term evaluation of the trade-off criterion.
inline double alpha_mmd_sq(const FeatureMatrix& f,
                           const std::vector<Index>& idx, double alpha,
                           double sigma) {
  const Index n = f.rows();
  const double m = static_cast<double>(idx.size());
  double cross = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (const Index j : idx) cross += gaussian_k(f, i, j, sigma);
  }
  return alpha * alpha * kbar(f, sigma) + avg_similarity(f, idx, sigma) -
         2.0 * alpha / (m * static_cast<double>(n)) * cross;
}

inline double mmd_sq(const FeatureMatrix& f, const std::vector<Index>& idx,
                     double sigma) {
  return alpha_mmd_sq(f, idx, 1.0, sigma);
}

// f_{I_p}(x_i) = sum_{j in I_p} k(x_i, x_j) - alpha p mu(x_i)
inline double herding_objective(const FeatureMatrix& f,
                                const std::vector<Index>& selected, Index i,
                                double alpha, double sigma) {
  double acc = 0.0;
  for (const Index j : selected) acc += gaussian_k(f, i, j, sigma);
  return acc - alpha * static_cast<double>(selected.size()) *
                   mu_at(f, i, sigma);
}

// Running average (1/p) sum_{j in selected} k(x_j, x_i).
inline double running_average(const FeatureMatrix& f,
                              const std::vector<Index>& selected, Index i,
                              double sigma) {
  double acc = 0.0;
  for (const Index j : selected) acc += gaussian_k(f, j, i, sigma);
  return acc / static_cast<double>(selected.size());
}

// Uniform cloud in [-1, 1]^d.
inline FeatureMatrix random_features(Index n, Index d, kherd::SplitMix64& rng) {
  FeatureMatrix f(n, d);
  for (Index i = 0; i < n; ++i) {
    for (Index c = 0; c < d; ++c) f(i, c) = 2.0 * rng.uniform() - 1.0;
  }
  return f;
}

// Random subset of size m (without replacement).
inline std::vector<Index> random_subset(Index n, Index m,
                                        kherd::SplitMix64& rng) {
  std::vector<Index> pool(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (Index i = 0; i < m; ++i) {
    const Index j = i + static_cast<Index>(rng.uniform_below(
                            static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(m));
  return pool;
}

}  // namespace naive
