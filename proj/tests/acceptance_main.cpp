// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Covers the exactly checkable mathematics (degeneracies, the deviation and
// finite-sample bounds, the dominance chain), the desk-scale benchmark
// reproduction, complexity scaling, the hand-traced golden cases and the
// serialisation contracts.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "kherd/io.hpp"
#include "kherd/oracle.hpp"
#include "kherd/selection.hpp"
#include "kherd/svg.hpp"
#include "kherd/synthbench.hpp"
#include "naive_oracle.hpp"

using namespace kherd;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const char* title, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number,
              title, detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Dataset line_dataset(std::initializer_list<double> xs) {
  FeatureMatrix f(static_cast<Index>(xs.size()), 1);
  Index i = 0;
  for (const double x : xs) f(i++, 0) = x;
  return make_dataset(std::move(f));
}

struct RandomInstance {
  FeatureMatrix features;
  KernelContext ctx;
  std::vector<Index> subset;
  double alpha;
};

RandomInstance random_instance(SplitMix64& rng, Index max_n, bool cache_gram) {
  const Index n = 2 + static_cast<Index>(rng.uniform_below(
                          static_cast<std::uint64_t>(max_n - 1)));
  const Index m = 1 + static_cast<Index>(
                          rng.uniform_below(static_cast<std::uint64_t>(n)));
  FeatureMatrix f = naive::random_features(n, 2, rng);
  ContextOptions opt;
  opt.cache_gram = cache_gram;
  KernelContext ctx =
      KernelContext::build(make_dataset(f), KernelSpec::gaussian(1.0), opt);
  return {std::move(f), std::move(ctx), naive::random_subset(n, m, rng),
          rng.uniform()};
}

// 1. alpha=1 degenerates to MMD^2, alpha=0 to average similarity.
void criterion_degeneracy() {
  SplitMix64 rng(101);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const RandomInstance inst = random_instance(rng, 100, false);
    const double d1 = std::abs(alpha_mmd_sq(inst.ctx, inst.subset, 1.0) -
                               mmd_sq(inst.ctx, inst.subset));
    const double d0 = std::abs(alpha_mmd_sq(inst.ctx, inst.subset, 0.0) -
                               avg_similarity(inst.ctx, inst.subset));
    worst = std::max(worst, std::max(d0, d1));
  }
  report(1, "degeneracy identities at alpha=1 and alpha=0", worst <= 1e-12,
         "max deviation " + std::to_string(worst));
}

// 2. Full-set identity (1-alpha)^2 kbar; subset values below (1+alpha^2) K.
void criterion_full_set_identity() {
  SplitMix64 rng(102);
  bool pass = true;
  double worst_identity = 0.0;
  for (int t = 0; t < 20 && pass; ++t) {
    const Index n = 2 + static_cast<Index>(rng.uniform_below(40));
    const KernelContext ctx = KernelContext::build(
        make_dataset(naive::random_features(n, 2, rng)),
        KernelSpec::gaussian(1.0));
    std::vector<Index> full(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) full[static_cast<std::size_t>(i)] = i;
    for (const double alpha : {0.0, 0.25, 0.5, 0.9, 1.0}) {
      const double dev =
          std::abs(alpha_mmd_sq(ctx, full, alpha) -
                   (1.0 - alpha) * (1.0 - alpha) * ctx.kbar());
      worst_identity = std::max(worst_identity, dev);
      if (dev > 1e-10) pass = false;
    }
  }
  for (int t = 0; t < 100 && pass; ++t) {
    const RandomInstance inst = random_instance(rng, 40, false);
    if (alpha_mmd_sq(inst.ctx, inst.subset, inst.alpha) >
        (1.0 + inst.alpha * inst.alpha) * inst.ctx.kmax() + 1e-9) {
      pass = false;
    }
  }
  report(2, "full-set identity and subset upper bound", pass,
         "max identity deviation " + std::to_string(worst_identity));
}

// 3. | sqrt(alpha-MMD^2) - sqrt(MMD^2) | <= (1-alpha) sqrt(K).
void criterion_deviation_bound() {
  SplitMix64 rng(103);
  bool pass = true;
  for (int t = 0; t < 100; ++t) {
    const RandomInstance inst = random_instance(rng, 60, false);
    if (!mmd_deviation_bound_check(inst.ctx, inst.subset, inst.alpha).pass) {
      pass = false;
    }
  }
  report(3, "deviation bound on 100 random triples", pass, "");
}

// 4. Uniform weights on a subset reproduce the subset criterion.
void criterion_weighted_equivalence() {
  SplitMix64 rng(104);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const RandomInstance inst = random_instance(rng, 40, t % 2 == 0);
    Eigen::VectorXd w = Eigen::VectorXd::Zero(inst.ctx.n());
    const double share = 1.0 / static_cast<double>(inst.subset.size());
    for (const Index i : inst.subset) w[i] += share;
    worst = std::max(
        worst, std::abs(weighted_alpha_mmd_sq(inst.ctx, w, inst.alpha) -
                        alpha_mmd_sq(inst.ctx, inst.subset, inst.alpha)));
  }
  report(4, "weighted form equals subset form under uniform weights",
         worst <= 1e-10, "max deviation " + std::to_string(worst));
}

// 5. GKHR: distinct indices and per-step scores matching direct evaluation.
void criterion_gkhr_correctness() {
  SplitMix64 rng(105);
  bool pass = true;
  for (int t = 0; t < 200 && pass; ++t) {
    const Index n = 10 + static_cast<Index>(rng.uniform_below(191));
    const Index m = 1 + static_cast<Index>(rng.uniform_below(
                            static_cast<std::uint64_t>(std::max<Index>(
                                1, n / 5))));
    const double sigma = 0.6 + rng.uniform();
    const double alpha = rng.uniform();
    const FeatureMatrix f = naive::random_features(n, 2, rng);
    const KernelContext ctx =
        KernelContext::build(make_dataset(f), KernelSpec::gaussian(sigma));
    const SelectionResult r = gkhr(ctx, m, AlphaParam::explicit_value(alpha));

    const std::set<Index> unique(r.indices.begin(), r.indices.end());
    if (static_cast<Index>(unique.size()) != m) pass = false;

    std::vector<Index> prefix;
    for (std::size_t p = 0; p < r.indices.size() && pass; ++p) {
      const Index winner = r.indices[p];
      double direct = -alpha * naive::mu_at(f, winner, sigma);
      if (!prefix.empty()) {
        direct += naive::running_average(f, prefix, winner, sigma);
      }
      if (std::abs(r.scores[p] - direct) > 1e-10) pass = false;
      prefix.push_back(winner);
    }
  }
  report(5, "no-replacement and incremental-score correctness", pass, "");
}

// 6. Finite-sample bound for both algorithms across the four distributions.
void criterion_finite_sample_bound() {
  const std::vector<DistributionSpec> dists = {
      DistributionSpec::gmm1(), DistributionSpec::gmm2(),
      DistributionSpec::circle_annulus(), DistributionSpec::uniform_square()};
  const Index n = 1000;
  bool pass = true;
  double worst_margin = -1e9;
  for (std::size_t d = 0; d < dists.size(); ++d) {
    for (int seed = 0; seed < 10; ++seed) {
      const Dataset data =
          sample(dists[d], n, derive_stream_seed(2024, d * 100 + seed));
      const KernelContext ctx = KernelContext::build(
          data, KernelSpec::gaussian(median_bandwidth(data)));
      for (const Index m : {10, 50, 100, 200}) {
        const double alphas[2] = {
            static_cast<double>(m) / static_cast<double>(n),
            1.0 - 1.0 / std::sqrt(static_cast<double>(m))};
        for (const double alpha : alphas) {
          const double rhs = bound_constants(ctx, alpha, m).rhs;
          for (const bool without : {true, false}) {
            const AlphaParam a = AlphaParam::explicit_value(alpha);
            const SelectionResult r =
                without ? gkhr(ctx, m, a) : gkh(ctx, m, a);
            const double value = alpha_mmd_sq(ctx, r.indices, alpha);
            worst_margin = std::max(worst_margin, value - rhs);
            if (value > rhs + 1e-9) pass = false;
          }
        }
      }
    }
  }
  report(6, "finite-sample bound for gkhr and gkh on all distributions", pass,
         "worst value-rhs margin " + std::to_string(worst_margin));
}

// 7. affine optimum <= exhaustive optimum <= greedy <= bound rhs.
void criterion_dominance_chain() {
  SplitMix64 rng(107);
  bool pass = true;
  for (int t = 0; t < 50 && pass; ++t) {
    const Index n = 5 + static_cast<Index>(rng.uniform_below(8));
    const Index m = 1 + static_cast<Index>(rng.uniform_below(4));
    const double alpha = rng.uniform();
    ContextOptions opt;
    opt.cache_gram = true;
    const KernelContext ctx = KernelContext::build(
        make_dataset(naive::random_features(n, 2, rng)),
        KernelSpec::gaussian(1.0), opt);
    const double affine = optimal_affine_weights(ctx, alpha).value;
    const OracleReport exact = exhaustive_min(ctx, m, alpha);
    const double greedy = alpha_mmd_sq(
        ctx, gkhr(ctx, m, AlphaParam::explicit_value(alpha)).indices, alpha);
    const double rhs = bound_constants(ctx, alpha, m).rhs;
    if (affine > exact.best_value + 1e-9) pass = false;
    if (exact.best_value > greedy + 1e-9) pass = false;
    if (greedy > rhs + 1e-9) pass = false;
  }
  report(7, "oracle dominance chain on 50 enumerable instances", pass, "");
}

// 8. Desk-scale reproduction of the D-criterion comparison.
void criterion_bench_reproduction() {
  BenchConfig config;
  config.distributions = {
      DistributionSpec::gmm1(), DistributionSpec::gmm2(),
      DistributionSpec::circle_annulus(), DistributionSpec::uniform_square()};
  config.ns = {1000, 3000};
  config.fracs = {0.01, 0.05, 0.1, 0.2};
  config.runs = 10;
  config.alpha_rule = AlphaRule::ratio;
  config.seed = 77;
  const BenchReport rep = run_comparison(config);

  bool pass = true;
  double worst_small_mean = 0.0;
  for (const auto& cell : rep.cells) {
    for (const double d : cell.d_values) {
      if (!(d >= -1.0 && d <= 1.0)) pass = false;
    }
    if (cell.frac <= 0.05) {
      worst_small_mean = std::max(worst_small_mean, std::abs(cell.d_mean));
      if (std::abs(cell.d_mean) > 0.3) pass = false;
    }
  }
  report(8, "benchmark reproduction: D in [-1,1], small-budget |mean D| <= 0.3",
         pass, "worst small-budget |mean D| " + std::to_string(worst_small_mean));
}

// 9. Selection loop scales like O(mn): doubling n at fixed m stays in
//    [1.5, 3.0] per step.
void criterion_complexity_scaling() {
  const Index m = 400;
  const AlphaParam alpha = AlphaParam::auto_budget(m);
  const std::vector<Index> sizes{2000, 4000, 8000};

  std::vector<KernelContext> contexts;
  for (const Index n : sizes) {
    const Dataset data = sample(DistributionSpec::uniform_square(), n, 5);
    contexts.push_back(KernelContext::build(
        data, KernelSpec::gaussian(median_bandwidth(data))));
    gkhr(contexts.back(), m, alpha);  // warm-up
  }
  // Interleave the timed runs across sizes so slow periods of the host hit
  // every cell alike instead of skewing one ratio.
  std::vector<std::vector<double>> times(sizes.size());
  for (int run = 0; run < 3; ++run) {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const auto t0 = Clock::now();
      gkhr(contexts[i], m, alpha);
      times[i].push_back(seconds_since(t0) * 1000.0);
    }
  }
  std::vector<double> medians;
  for (auto& cell : times) {
    std::sort(cell.begin(), cell.end());
    medians.push_back(cell[1]);
  }
  bool pass = true;
  std::string detail;
  for (std::size_t i = 1; i < medians.size(); ++i) {
    const double ratio = medians[i] / medians[i - 1];
    if (!(ratio >= 1.5 && ratio <= 3.0)) pass = false;
    detail += (i > 1 ? ", " : "") + std::to_string(ratio);
  }
  report(9, "selection wall time doubles with n within [1.5, 3.0]", pass,
         "ratios " + detail);
}

// 10. Hand-traced golden cases.
void criterion_golden_cases() {
  bool pass = true;
  std::string why;

  const KernelContext three = KernelContext::build(
      line_dataset({0.0, 1.0, 2.0}), KernelSpec::gaussian(1.0));
  if (gkhr(three, 2, AlphaParam::explicit_value(1.0)).indices !=
      std::vector<Index>{1, 0}) {
    pass = false;
    why += "gkhr trace; ";
  }

  const KernelContext far = KernelContext::build(line_dataset({0.0, 10.0}),
                                                 KernelSpec::gaussian(1.0));
  if (gkh(far, 3, AlphaParam::explicit_value(1.0)).indices !=
      std::vector<Index>{0, 1, 0}) {
    pass = false;
    why += "gkh repetition trace; ";
  }

  if (gkh(three, 2, AlphaParam::explicit_value(0.0)).indices !=
      std::vector<Index>{0, 2}) {
    pass = false;
    why += "alpha=0 diversity trace; ";
  }

  const OracleReport oracle = exhaustive_min(three, 2, 1.0);
  if (oracle.best_indices != std::vector<Index>{0, 2} ||
      std::abs(oracle.best_value - 0.08593321523349806) > 1e-12 ||
      std::abs(oracle.best_value - 0.085937) > 1e-4) {
    pass = false;
    why += "exhaustive optimum; ";
  }

  if (median_bandwidth(line_dataset({0.0, 1.0, 3.0})) != 2.0) {
    pass = false;
    why += "median bandwidth; ";
  }

  report(10, "hand-traced golden cases", pass, why);
}

// 11. Format round-trips and deterministic SVG.
void criterion_format_round_trips() {
  bool pass = true;
  std::string why;

  SplitMix64 rng(111);
  FeatureMatrix f = naive::random_features(25, 3, rng);
  f(0, 0) = 1.0 / 3.0;
  std::vector<std::int32_t> labels(25);
  for (std::size_t i = 0; i < 25; ++i) {
    labels[i] = static_cast<std::int32_t>(i % 4);
  }
  const Dataset ds = make_dataset(f, labels);

  const Dataset via_csv = parse_csv(to_csv(ds));
  if (via_csv.features != ds.features || *via_csv.labels != *ds.labels) {
    pass = false;
    why += "csv; ";
  }
  const Dataset via_rdsb = parse_rdsb(to_rdsb(ds));
  if (via_rdsb.features != ds.features || *via_rdsb.labels != *ds.labels) {
    pass = false;
    why += "rdsb; ";
  }

  SelectionRecord rec;
  rec.dataset_hash = dataset_fingerprint(ds);
  rec.n = ds.n();
  rec.d = ds.d();
  rec.kernel = KernelSpec::gaussian(0.7);
  rec.sigma_rule = "median";
  rec.alpha = AlphaParam::auto_budget(4);
  rec.algorithm = "gkhr";
  rec.m = 4;
  rec.indices = {3, 1, 17, 0};
  rec.final_alpha_mmd_sq = 0.25;
  rec.bound = BoundRecord{0.1, 2.0, 1.0, true};
  rec.wall_time_ms = 3;
  rec.seed = 1;
  const std::string rec_json = to_json(rec);
  if (to_json(selection_record_from_json(rec_json)) != rec_json) {
    pass = false;
    why += "selection record; ";
  }

  BenchConfig config;
  config.distributions = {DistributionSpec::uniform_square()};
  config.ns = {50};
  config.fracs = {0.1};
  config.runs = 2;
  config.seed = 9;
  const std::string bench_json = to_json(run_comparison(config));
  if (to_json(bench_report_from_json(bench_json)) != bench_json) {
    pass = false;
    why += "bench report; ";
  }

  FeatureMatrix plane(4, 2);
  plane << 0, 0, 1, 0, 0, 1, 1, 1;
  const Dataset plane_ds = make_dataset(plane);
  const std::vector<Index> selected{2};
  if (render_scatter_svg(plane_ds, selected) !=
      render_scatter_svg(plane_ds, selected)) {
    pass = false;
    why += "svg determinism; ";
  }

  report(11, "format round-trips and deterministic SVG", pass, why);
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  criterion_degeneracy();
  criterion_full_set_identity();
  criterion_deviation_bound();
  criterion_weighted_equivalence();
  criterion_gkhr_correctness();
  criterion_finite_sample_bound();
  criterion_dominance_chain();
  criterion_bench_reproduction();
  criterion_complexity_scaling();
  criterion_golden_cases();
  criterion_format_round_trips();
  std::printf("%d of 11 criteria passed in %.1f s\n", 11 - g_failures,
              seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
