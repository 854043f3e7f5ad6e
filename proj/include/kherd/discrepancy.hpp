#pragma once

#include <span>
#include <string>

#include "kherd/kernel.hpp"

namespace kherd {

// How a trade-off value alpha was chosen. "auto_budget" is 1 - 1/sqrt(m),
// "ratio" is m/n.
enum class AlphaRule { explicit_value, auto_budget, ratio };

struct AlphaParam {
  double value = 1.0;
  AlphaRule rule = AlphaRule::explicit_value;

  static AlphaParam explicit_value(double alpha);
  static AlphaParam auto_budget(Index m);
  static AlphaParam ratio(Index m, Index n);
};

const char* alpha_rule_name(AlphaRule rule);
AlphaRule alpha_rule_from_name(const std::string& name);

// Mean pairwise similarity of the selected multiset, diagonal included:
// (1/m^2) sum_{i in I} sum_{j in I} k(x_i, x_j). Repeated indices count with
// multiplicity.
double avg_similarity(const KernelContext& ctx, std::span<const Index> indices);

// Biased empirical MMD^2 between the selected multiset and the full set.
// Identical code path to alpha_mmd_sq at alpha = 1.
double mmd_sq(const KernelContext& ctx, std::span<const Index> indices);

// The trade-off criterion
//   (alpha^2/n^2) 1'K1 + (1/m^2) sum_{I x I} k - (2 alpha / mn) sum_{[n] x I} k,
// which is MMD^2 at alpha = 1 and avg_similarity at alpha = 0. Values within
// 1e-12 of zero are clamped to exactly 0 so square roots never see round-off
// noise.
double alpha_mmd_sq(const KernelContext& ctx, std::span<const Index> indices,
                    double alpha);

// Weighted generalisation w'Kw - 2 alpha w'mu + alpha^2 kbar over weights with
// w'1 = 1 (entries may be negative). Throws if the sum constraint is violated
// by more than 1e-9.
double weighted_alpha_mmd_sq(const KernelContext& ctx,
                             const Eigen::VectorXd& w, double alpha);

// lambda = (1 - alpha) / (alpha m); undefined at alpha = 0.
double lambda_from_alpha(double alpha, Index m);
double alpha_from_lambda(double lambda, Index m);

}  // namespace kherd
