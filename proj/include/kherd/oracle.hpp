#pragma once

#include <cstdint>
#include <vector>

#include "kherd/discrepancy.hpp"

namespace kherd {

// Ground-truth result of enumerating every candidate subset (or multiset).
struct OracleReport {
  std::vector<Index> best_indices;
  double best_value = 0.0;
  std::uint64_t enumerated = 0;
  double greedy_value = 0.0;  // herding on the same instance
  double gap = 0.0;           // greedy_value - best_value, >= 0 up to round-off
  double alpha = 1.0;
  Index m = 0;
  bool with_replacement = false;
};

// Enumerates all size-m index subsets (multisets when with_replacement) in
// lexicographic order and returns the minimiser of alpha-MMD^2; exact ties
// keep the lexicographically smallest candidate. Guarded: more than
// max_candidates combinations is an error, this path is meant for n <= 15.
OracleReport exhaustive_min(const KernelContext& ctx, Index m, double alpha,
                            bool with_replacement = false,
                            std::uint64_t max_candidates = 1000000);

struct AffineWeights {
  Eigen::VectorXd w;
  double value = 0.0;      // weighted alpha-MMD^2 at w
  double condition = 0.0;  // lambda_max / lambda_min estimate of the Gram
  double jitter = 0.0;     // diagonal jitter applied, 0 when none
};

// Closed-form minimiser of the weighted alpha-MMD^2 over w'1 = 1 (entries may
// go negative). Needs the cached Gram and n <= 500. An ill-conditioned Gram
// (estimate > 1e12) gets a 1e-10*K diagonal jitter when allow_jitter is set
// and is an error otherwise.
AffineWeights optimal_affine_weights(const KernelContext& ctx, double alpha,
                                     bool allow_jitter = true);

struct BoundConstants {
  double c_alpha_sq = 0.0;  // (1 - alpha)^2 kbar
  double b = 0.0;           // 2 K
  double rhs = 0.0;         // c_alpha_sq + b (2 + ln m) / (m + 1)
};

// Constants of the finite-sample herding bound; the log is natural.
BoundConstants bound_constants(const KernelContext& ctx, double alpha, Index m);

struct DeviationCheck {
  double lhs = 0.0;     // | sqrt(alpha-MMD^2) - sqrt(MMD^2) |
  double rhs = 0.0;     // (1 - alpha) sqrt(K)
  double margin = 0.0;  // rhs - lhs
  bool pass = false;    // lhs <= rhs + 1e-9
};

DeviationCheck mmd_deviation_bound_check(const KernelContext& ctx,
                                         std::span<const Index> indices,
                                         double alpha);

}  // namespace kherd
