#include "kherd/discrepancy.hpp"

#include <cmath>
#include <stdexcept>

namespace kherd {

namespace {

constexpr double kZeroClamp = 1e-12;

void check_indices(const KernelContext& ctx, std::span<const Index> indices) {
  if (indices.empty()) {
    throw std::invalid_argument("index set must be non-empty");
  }
  const Index n = ctx.n();
  for (const Index i : indices) {
    if (i < 0 || i >= n) {
      throw std::invalid_argument("index out of range: " + std::to_string(i));
    }
  }
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
}

double clamp_near_zero(double v) {
  return (v > -kZeroClamp && v < kZeroClamp) ? 0.0 : v;
}

}  // namespace

AlphaParam AlphaParam::explicit_value(double alpha) {
  check_alpha(alpha);
  return {alpha, AlphaRule::explicit_value};
}

AlphaParam AlphaParam::auto_budget(Index m) {
  if (m < 1) throw std::invalid_argument("auto_budget requires m >= 1");
  return {1.0 - 1.0 / std::sqrt(static_cast<double>(m)),
          AlphaRule::auto_budget};
}

AlphaParam AlphaParam::ratio(Index m, Index n) {
  if (m < 1 || n < 1 || m > n) {
    throw std::invalid_argument("ratio rule requires 1 <= m <= n");
  }
  return {static_cast<double>(m) / static_cast<double>(n), AlphaRule::ratio};
}

const char* alpha_rule_name(AlphaRule rule) {
  switch (rule) {
    case AlphaRule::explicit_value:
      return "explicit";
    case AlphaRule::auto_budget:
      return "auto_budget";
    case AlphaRule::ratio:
      return "ratio";
  }
  return "unknown";
}

AlphaRule alpha_rule_from_name(const std::string& name) {
  if (name == "explicit") return AlphaRule::explicit_value;
  if (name == "auto_budget" || name == "auto") return AlphaRule::auto_budget;
  if (name == "ratio") return AlphaRule::ratio;
  throw std::invalid_argument("unknown alpha rule: " + name);
}

double avg_similarity(const KernelContext& ctx,
                      std::span<const Index> indices) {
  check_indices(ctx, indices);
  const Index m = static_cast<Index>(indices.size());
  double acc = 0.0;
  for (const Index i : indices) {
    for (const Index j : indices) acc += ctx.k(i, j);
  }
  return acc / (static_cast<double>(m) * static_cast<double>(m));
}

double alpha_mmd_sq(const KernelContext& ctx, std::span<const Index> indices,
                    double alpha) {
  check_alpha(alpha);
  const double self_term = avg_similarity(ctx, indices);
  const Index m = static_cast<Index>(indices.size());
  double mu_sum = 0.0;
  for (const Index i : indices) mu_sum += ctx.mu()[i];
  const double v = alpha * alpha * ctx.kbar() + self_term -
                   (2.0 * alpha / static_cast<double>(m)) * mu_sum;
  return clamp_near_zero(v);
}

double mmd_sq(const KernelContext& ctx, std::span<const Index> indices) {
  return alpha_mmd_sq(ctx, indices, 1.0);
}

double weighted_alpha_mmd_sq(const KernelContext& ctx,
                             const Eigen::VectorXd& w, double alpha) {
  check_alpha(alpha);
  if (w.size() != ctx.n()) {
    throw std::invalid_argument("weight vector length must equal n");
  }
  double sum = 0.0;
  for (Index i = 0; i < w.size(); ++i) sum += w[i];
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("weights must satisfy w'1 = 1");
  }

  const Index n = ctx.n();
  double quad = 0.0;
  Eigen::VectorXd row;
  for (Index i = 0; i < n; ++i) {
    if (w[i] == 0.0 && !ctx.has_gram()) continue;  // skip dead rows, lazy mode
    double acc = 0.0;
    if (ctx.has_gram()) {
      const auto& g = ctx.gram();
      for (Index j = 0; j < n; ++j) acc += g(i, j) * w[j];
    } else {
      ctx.kernel_row(i, row);
      for (Index j = 0; j < n; ++j) acc += row[j] * w[j];
    }
    quad += w[i] * acc;
  }

  double cross = 0.0;
  for (Index i = 0; i < n; ++i) cross += w[i] * ctx.mu()[i];
  const double v = quad - 2.0 * alpha * cross + alpha * alpha * ctx.kbar();
  return clamp_near_zero(v);
}

double lambda_from_alpha(double alpha, Index m) {
  if (m < 1) throw std::invalid_argument("budget m must be >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument(
        "lambda is undefined at alpha = 0 (diversity-only limit)");
  }
  return (1.0 - alpha) / (alpha * static_cast<double>(m));
}

double alpha_from_lambda(double lambda, Index m) {
  if (m < 1) throw std::invalid_argument("budget m must be >= 1");
  if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
  return 1.0 / (1.0 + lambda * static_cast<double>(m));
}

}  // namespace kherd
