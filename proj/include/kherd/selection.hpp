#pragma once

#include "kherd/baselines.hpp"
#include "kherd/herding.hpp"

namespace kherd {

struct SelectOptions {
  Algorithm algorithm = Algorithm::gkhr;
  AlphaRule alpha_rule = AlphaRule::auto_budget;
  double alpha = 1.0;      // used when alpha_rule == explicit_value
  std::uint64_t seed = 0;  // baselines only
};

// Dispatches to the requested algorithm on a prebuilt context, resolves the
// alpha rule against (m, n), and attaches the independently recomputed final
// alpha-MMD^2.
SelectionResult run_selection(const KernelContext& ctx, Index m,
                              const SelectOptions& options);

struct PipelineOptions {
  // Kernel defaults to a Gaussian with median-heuristic bandwidth.
  std::optional<KernelSpec> kernel;
  bool cache_gram = false;
  SelectOptions select;
};

struct PipelineResult {
  std::shared_ptr<const KernelContext> context;
  SelectionResult result;
  bool bandwidth_was_median = false;
};

// End-to-end convenience: build the kernel context, then run the selection.
PipelineResult select(std::shared_ptr<const Dataset> dataset, Index m,
                      const PipelineOptions& options = {});

}  // namespace kherd
