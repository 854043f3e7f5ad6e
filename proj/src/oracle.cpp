#include "kherd/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "kherd/herding.hpp"

namespace kherd {

namespace {

// C(n, k) capped at `cap` (returns cap + 1 on overflow past it).
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                              std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const long double next =
        static_cast<long double>(result) * static_cast<long double>(n - k + i) /
        static_cast<long double>(i);
    if (next > static_cast<long double>(cap)) return cap + 1;
    result = static_cast<std::uint64_t>(next + 0.5L);
  }
  return result;
}

bool next_combination(std::vector<Index>& c, Index n) {
  const Index m = static_cast<Index>(c.size());
  Index i = m - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - m + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (Index j = i + 1; j < m; ++j) {
    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

bool next_multiset(std::vector<Index>& c, Index n) {
  const Index m = static_cast<Index>(c.size());
  Index i = m - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - 1) --i;
  if (i < 0) return false;
  const Index v = c[static_cast<std::size_t>(i)] + 1;
  for (Index j = i; j < m; ++j) c[static_cast<std::size_t>(j)] = v;
  return true;
}

}  // namespace

OracleReport exhaustive_min(const KernelContext& ctx, Index m, double alpha,
                            bool with_replacement,
                            std::uint64_t max_candidates) {
  if (m < 1) throw std::invalid_argument("budget m must be >= 1");
  const Index n = ctx.n();
  if (!with_replacement && m > n) {
    throw std::invalid_argument("budget exceeds ground set (m > n)");
  }
  const std::uint64_t count =
      with_replacement
          ? binomial_capped(static_cast<std::uint64_t>(n + m - 1),
                            static_cast<std::uint64_t>(m), max_candidates)
          : binomial_capped(static_cast<std::uint64_t>(n),
                            static_cast<std::uint64_t>(m), max_candidates);
  if (count > max_candidates) {
    throw std::invalid_argument(
        "exhaustive search would enumerate more than the candidate guard; "
        "use the greedy path");
  }

  OracleReport report;
  report.alpha = alpha;
  report.m = m;
  report.with_replacement = with_replacement;

  std::vector<Index> candidate(static_cast<std::size_t>(m));
  if (with_replacement) {
    std::fill(candidate.begin(), candidate.end(), Index{0});
  } else {
    for (Index i = 0; i < m; ++i) candidate[static_cast<std::size_t>(i)] = i;
  }

  bool first = true;
  do {
    const double value = alpha_mmd_sq(ctx, candidate, alpha);
    ++report.enumerated;
    if (first || value < report.best_value) {  // lex order; ties keep first
      report.best_value = value;
      report.best_indices = candidate;
      first = false;
    }
  } while (with_replacement ? next_multiset(candidate, n)
                            : next_combination(candidate, n));

  const AlphaParam a = AlphaParam::explicit_value(alpha);
  const SelectionResult greedy =
      with_replacement ? gkh(ctx, m, a) : gkhr(ctx, m, a);
  report.greedy_value = alpha_mmd_sq(ctx, greedy.indices, alpha);
  report.gap = report.greedy_value - report.best_value;
  return report;
}

AffineWeights optimal_affine_weights(const KernelContext& ctx, double alpha,
                                     bool allow_jitter) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  if (!ctx.has_gram()) {
    throw std::invalid_argument(
        "optimal_affine_weights requires a cached Gram matrix");
  }
  const Index n = ctx.n();
  if (n > 500) {
    throw std::invalid_argument(
        "optimal_affine_weights is limited to n <= 500");
  }

  Eigen::MatrixXd gram = ctx.gram();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram,
                                                     Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();

  AffineWeights out;
  double floor = lo;
  if (lo <= 0.0 || hi / lo > 1e12) {
    if (!allow_jitter) {
      throw std::invalid_argument(
          "Gram matrix is ill-conditioned; retry with diagonal jitter");
    }
    out.jitter = 1e-10 * ctx.kmax();
    gram.diagonal().array() += out.jitter;
    floor = lo + out.jitter;
    if (floor <= 0.0 || hi / floor > 1e12) {
      throw std::invalid_argument(
          "Gram matrix remains ill-conditioned after jitter");
    }
  }
  out.condition = hi / floor;

  const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  const Eigen::VectorXd kinv_mu = ldlt.solve(ctx.mu());
  const Eigen::VectorXd kinv_one = ldlt.solve(Eigen::VectorXd::Ones(n));
  const double one_kinv_one = kinv_one.sum();
  const double one_kinv_mu = kinv_mu.sum();

  out.w = alpha * (kinv_mu - kinv_one * (one_kinv_mu / one_kinv_one)) +
          kinv_one / one_kinv_one;
  out.value = weighted_alpha_mmd_sq(ctx, out.w, alpha);
  return out;
}

BoundConstants bound_constants(const KernelContext& ctx, double alpha,
                               Index m) {
  if (m < 1) throw std::invalid_argument("budget m must be >= 1");
  BoundConstants c;
  c.c_alpha_sq = (1.0 - alpha) * (1.0 - alpha) * ctx.kbar();
  c.b = 2.0 * ctx.kmax();
  c.rhs = c.c_alpha_sq +
          c.b * (2.0 + std::log(static_cast<double>(m))) /
              static_cast<double>(m + 1);
  return c;
}

DeviationCheck mmd_deviation_bound_check(const KernelContext& ctx,
                                         std::span<const Index> indices,
                                         double alpha) {
  DeviationCheck check;
  const double a = alpha_mmd_sq(ctx, indices, alpha);
  const double b = mmd_sq(ctx, indices);
  check.lhs = std::abs(std::sqrt(std::max(a, 0.0)) -
                       std::sqrt(std::max(b, 0.0)));
  check.rhs = (1.0 - alpha) * std::sqrt(ctx.kmax());
  check.margin = check.rhs - check.lhs;
  check.pass = check.lhs <= check.rhs + 1e-9;
  return check;
}

}  // namespace kherd
