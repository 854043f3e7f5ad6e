#include "kherd/selection.hpp"

#include <stdexcept>

namespace kherd {

namespace {

AlphaParam resolve_alpha(const SelectOptions& options, Index m, Index n) {
  switch (options.alpha_rule) {
    case AlphaRule::auto_budget:
      return AlphaParam::auto_budget(m);
    case AlphaRule::ratio:
      return AlphaParam::ratio(m, n);
    case AlphaRule::explicit_value:
      return AlphaParam::explicit_value(options.alpha);
  }
  throw std::logic_error("unreachable alpha rule");
}

}  // namespace

SelectionResult run_selection(const KernelContext& ctx, Index m,
                              const SelectOptions& options) {
  const AlphaParam alpha = resolve_alpha(options, m, ctx.n());
  SelectionResult result;
  switch (options.algorithm) {
    case Algorithm::gkhr:
      result = gkhr(ctx, m, alpha);
      break;
    case Algorithm::gkh:
      result = gkh(ctx, m, alpha);
      break;
    case Algorithm::random:
      result = baseline_random(ctx.dataset(), m, options.seed);
      break;
    case Algorithm::stratified:
      result = baseline_stratified(ctx.dataset(), m, options.seed);
      break;
    case Algorithm::kmeans:
      result = baseline_kmeans(ctx.dataset(), m, options.seed);
      break;
  }
  result.alpha = alpha;
  result.criterion = alpha_mmd_sq(ctx, result.indices, alpha.value);
  return result;
}

PipelineResult select(std::shared_ptr<const Dataset> dataset, Index m,
                      const PipelineOptions& options) {
  if (!dataset) throw std::invalid_argument("null dataset");
  PipelineResult out;
  KernelSpec spec;
  if (options.kernel) {
    spec = *options.kernel;
  } else {
    spec = KernelSpec::gaussian(median_bandwidth(*dataset));
    out.bandwidth_was_median = true;
  }
  ContextOptions ctx_options;
  ctx_options.cache_gram = options.cache_gram;
  out.context = std::make_shared<const KernelContext>(
      KernelContext::build(dataset, spec, ctx_options));
  out.result = run_selection(*out.context, m, options.select);
  return out;
}

}  // namespace kherd
