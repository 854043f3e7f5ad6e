#pragma once

#include <optional>
#include <vector>

#include "kherd/discrepancy.hpp"

namespace kherd {

enum class Algorithm { gkhr, gkh, random, stratified, kmeans };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

// Output of a selection run. `scores` holds the winning candidate's score
// s_{p-1}(x) - alpha mu(x) at each step for the herding algorithms and is
// empty for the baselines. `criterion` is the final alpha-MMD^2, recomputed
// from scratch by the discrepancy module rather than from the incremental
// state. `wall_ms` times the selection loop only, not context construction.
struct SelectionResult {
  std::vector<Index> indices;
  std::vector<double> scores;
  AlphaParam alpha;
  Algorithm algorithm = Algorithm::gkhr;
  std::optional<double> criterion;
  double wall_ms = 0.0;
};

// Greedy kernel herding without replacement: at step p pick
//   argmin_{i not yet selected} s_{p-1}(x_i) - alpha mu(x_i)
// then fold the winner's kernel row into the running average s with step size
// 1/p. Ties go to the lowest index. Requires 1 <= m <= n.
SelectionResult gkhr(const KernelContext& ctx, Index m, const AlphaParam& alpha);

// Same iteration with the argmin over all of [n]; repeats are allowed and m
// may exceed n.
SelectionResult gkh(const KernelContext& ctx, Index m, const AlphaParam& alpha);

}  // namespace kherd
