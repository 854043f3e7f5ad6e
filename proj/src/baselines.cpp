#include "kherd/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "kherd/rng.hpp"

namespace kherd {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Partial Fisher-Yates: the first m entries of a shuffle of [0, n).
std::vector<Index> draw_without_replacement(std::vector<Index> pool, Index m,
                                            SplitMix64& rng) {
  const Index n = static_cast<Index>(pool.size());
  for (Index i = 0; i < m; ++i) {
    const Index j = i + static_cast<Index>(
                            rng.uniform_below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(m));
  return pool;
}

void check_budget(const Dataset& dataset, Index m) {
  if (m < 1) throw std::invalid_argument("budget m must be >= 1");
  if (m > dataset.n()) {
    throw std::invalid_argument("budget exceeds ground set (m > n)");
  }
}

}  // namespace

SelectionResult baseline_random(const Dataset& dataset, Index m,
                                std::uint64_t seed) {
  check_budget(dataset, m);
  const auto t0 = Clock::now();
  SplitMix64 rng(seed);
  std::vector<Index> pool(static_cast<std::size_t>(dataset.n()));
  std::iota(pool.begin(), pool.end(), Index{0});

  SelectionResult result;
  result.algorithm = Algorithm::random;
  result.indices = draw_without_replacement(std::move(pool), m, rng);
  result.wall_ms = elapsed_ms(t0);
  return result;
}

SelectionResult baseline_stratified(const Dataset& dataset, Index m,
                                    std::uint64_t seed) {
  check_budget(dataset, m);
  if (!dataset.labels) {
    throw std::invalid_argument("stratified sampling requires labels");
  }
  const auto t0 = Clock::now();

  std::map<std::int32_t, std::vector<Index>> classes;
  for (Index i = 0; i < dataset.n(); ++i) {
    classes[(*dataset.labels)[static_cast<std::size_t>(i)]].push_back(i);
  }
  const Index n_classes = static_cast<Index>(classes.size());
  if (m < n_classes) {
    throw std::invalid_argument(
        "stratified budget smaller than the number of classes");
  }

  // Largest-remainder apportionment of m across classes; each allocation ends
  // up within one of the exact proportional quota and never above class size.
  const double n = static_cast<double>(dataset.n());
  struct Share {
    std::int32_t label;
    Index count;
    Index alloc;
    double remainder;
  };
  std::vector<Share> shares;
  Index allocated = 0;
  for (const auto& [label, members] : classes) {
    const double quota =
        static_cast<double>(m) * static_cast<double>(members.size()) / n;
    const Index floor_alloc = static_cast<Index>(quota);
    shares.push_back(
        {label, static_cast<Index>(members.size()), floor_alloc,
         quota - static_cast<double>(floor_alloc)});
    allocated += floor_alloc;
  }
  std::vector<std::size_t> order(shares.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return shares[a].remainder > shares[b].remainder;
  });
  for (std::size_t k = 0; allocated < m; k = (k + 1) % order.size()) {
    Share& s = shares[order[k]];
    if (s.alloc < s.count) {
      ++s.alloc;
      ++allocated;
    }
  }

  SplitMix64 rng(seed);
  SelectionResult result;
  result.algorithm = Algorithm::stratified;
  for (const Share& s : shares) {
    auto draws = draw_without_replacement(classes[s.label], s.alloc, rng);
    result.indices.insert(result.indices.end(), draws.begin(), draws.end());
  }
  result.wall_ms = elapsed_ms(t0);
  return result;
}

SelectionResult baseline_kmeans(const Dataset& dataset, Index m,
                                std::uint64_t seed, int max_iters,
                                double tol) {
  check_budget(dataset, m);
  const auto t0 = Clock::now();
  const FeatureMatrix& f = dataset.features;
  const Index n = dataset.n();
  SplitMix64 rng(seed);

  // k-means++ seeding over data points, D^2 weighting.
  std::vector<Index> seeds;
  seeds.reserve(static_cast<std::size_t>(m));
  std::vector<char> chosen(static_cast<std::size_t>(n), 0);
  Eigen::VectorXd min_sq =
      Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  const Index first =
      static_cast<Index>(rng.uniform_below(static_cast<std::uint64_t>(n)));
  seeds.push_back(first);
  chosen[static_cast<std::size_t>(first)] = 1;
  for (Index i = 0; i < n; ++i) {
    min_sq[i] = (f.row(i) - f.row(first)).squaredNorm();
  }
  while (static_cast<Index>(seeds.size()) < m) {
    double total = 0.0;
    for (Index i = 0; i < n; ++i) total += min_sq[i];
    Index pick = -1;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      for (Index i = 0; i < n; ++i) {
        acc += min_sq[i];
        if (acc > target) {
          pick = i;
          break;
        }
      }
      if (pick < 0) pick = n - 1;
    }
    if (pick < 0 || chosen[static_cast<std::size_t>(pick)]) {
      // All residual distances are zero (duplicate-heavy data): fall back to
      // the lowest unchosen index.
      pick = -1;
      for (Index i = 0; i < n; ++i) {
        if (!chosen[static_cast<std::size_t>(i)]) {
          pick = i;
          break;
        }
      }
    }
    seeds.push_back(pick);
    chosen[static_cast<std::size_t>(pick)] = 1;
    for (Index i = 0; i < n; ++i) {
      min_sq[i] = std::min(min_sq[i], (f.row(i) - f.row(pick)).squaredNorm());
    }
  }

  FeatureMatrix centroids(m, dataset.d());
  for (Index c = 0; c < m; ++c) centroids.row(c) = f.row(seeds[c]);

  // Lloyd iterations; an emptied cluster keeps its previous centroid.
  std::vector<Index> assign(static_cast<std::size_t>(n), 0);
  for (int iter = 0; iter < max_iters; ++iter) {
    for (Index i = 0; i < n; ++i) {
      Index best = 0;
      double best_sq = (f.row(i) - centroids.row(0)).squaredNorm();
      for (Index c = 1; c < m; ++c) {
        const double sq = (f.row(i) - centroids.row(c)).squaredNorm();
        if (sq < best_sq) {
          best_sq = sq;
          best = c;
        }
      }
      assign[static_cast<std::size_t>(i)] = best;
    }
    FeatureMatrix sums = FeatureMatrix::Zero(m, dataset.d());
    std::vector<Index> counts(static_cast<std::size_t>(m), 0);
    for (Index i = 0; i < n; ++i) {
      sums.row(assign[static_cast<std::size_t>(i)]) += f.row(i);
      ++counts[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])];
    }
    double max_move_sq = 0.0;
    for (Index c = 0; c < m; ++c) {
      if (counts[static_cast<std::size_t>(c)] == 0) continue;
      const Eigen::RowVectorXd next =
          sums.row(c) / static_cast<double>(counts[static_cast<std::size_t>(c)]);
      max_move_sq =
          std::max(max_move_sq, (next - centroids.row(c)).squaredNorm());
      centroids.row(c) = next;
    }
    if (max_move_sq < tol * tol) break;
  }

  // Centroid -> nearest data point, each point used at most once.
  SelectionResult result;
  result.algorithm = Algorithm::kmeans;
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  for (Index c = 0; c < m; ++c) {
    Index best = -1;
    double best_sq = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      const double sq = (f.row(i) - centroids.row(c)).squaredNorm();
      if (sq < best_sq) {
        best_sq = sq;
        best = i;
      }
    }
    taken[static_cast<std::size_t>(best)] = 1;
    result.indices.push_back(best);
  }
  result.wall_ms = elapsed_ms(t0);
  return result;
}

}  // namespace kherd
