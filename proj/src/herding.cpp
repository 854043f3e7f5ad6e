#include "kherd/herding.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

namespace kherd {

namespace {

using Clock = std::chrono::steady_clock;

SelectionResult herd(const KernelContext& ctx, Index m,
                     const AlphaParam& alpha, bool without_replacement) {
  if (m < 1) throw std::invalid_argument("budget m must be >= 1");
  const Index n = ctx.n();
  if (without_replacement && m > n) {
    throw std::invalid_argument("budget exceeds ground set (m > n)");
  }
  const double a = alpha.value;
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }

  SelectionResult result;
  result.alpha = alpha;
  result.algorithm =
      without_replacement ? Algorithm::gkhr : Algorithm::gkh;
  result.indices.reserve(static_cast<std::size_t>(m));
  result.scores.reserve(static_cast<std::size_t>(m));

  const auto t0 = Clock::now();

  const Eigen::VectorXd& mu = ctx.mu();
  Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd row(n);
  std::vector<char> taken(static_cast<std::size_t>(n), 0);

  for (Index p = 1; p <= m; ++p) {
    Index best = -1;
    double best_score = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i) {
      if (without_replacement && taken[static_cast<std::size_t>(i)]) continue;
      const double score = s[i] - a * mu[i];
      if (score < best_score) {  // strict: ties stay at the lowest index
        best_score = score;
        best = i;
      }
    }
    result.indices.push_back(best);
    result.scores.push_back(best_score);
    taken[static_cast<std::size_t>(best)] = 1;

    // s stays the running average of kernel rows over the selection so far;
    // updating every entry keeps the loop branch-free, the mask above is what
    // enforces no-replacement.
    ctx.kernel_row(best, row);
    const double beta = 1.0 / static_cast<double>(p);
    const double keep = 1.0 - beta;
    for (Index i = 0; i < n; ++i) s[i] = keep * s[i] + beta * row[i];
  }

  result.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return result;
}

}  // namespace

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::gkhr:
      return "gkhr";
    case Algorithm::gkh:
      return "gkh";
    case Algorithm::random:
      return "random";
    case Algorithm::stratified:
      return "stratified";
    case Algorithm::kmeans:
      return "kmeans";
  }
  return "unknown";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "gkhr") return Algorithm::gkhr;
  if (name == "gkh") return Algorithm::gkh;
  if (name == "random") return Algorithm::random;
  if (name == "stratified") return Algorithm::stratified;
  if (name == "kmeans") return Algorithm::kmeans;
  throw std::invalid_argument("unknown algorithm: " + name);
}

SelectionResult gkhr(const KernelContext& ctx, Index m,
                     const AlphaParam& alpha) {
  return herd(ctx, m, alpha, true);
}

SelectionResult gkh(const KernelContext& ctx, Index m,
                    const AlphaParam& alpha) {
  return herd(ctx, m, alpha, false);
}

}  // namespace kherd
