#include "kherd/synthbench.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kherd/herding.hpp"
#include "kherd/rng.hpp"

namespace kherd {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<GmmComponent> reference_components() {
  return {
      {{1.0, 2.0}, {2.0, 5.0}},
      {{-3.0, -5.0}, {1.0, 2.0}},
      {{-5.0, 4.0}, {8.0, 6.0}},
      {{15.0, 10.0}, {4.0, 9.0}},
  };
}

std::size_t pick_component(const std::vector<double>& weights, double u) {
  double acc = 0.0;
  for (std::size_t c = 0; c + 1 < weights.size(); ++c) {
    acc += weights[c];
    if (u < acc) return c;
  }
  return weights.size() - 1;
}

}  // namespace

DistributionSpec DistributionSpec::gmm1() {
  DistributionSpec s;
  s.kind = DistKind::gmm1;
  s.components = reference_components();
  s.weights = {0.95, 0.01, 0.02, 0.02};
  return s;
}

DistributionSpec DistributionSpec::gmm2() {
  DistributionSpec s;
  s.kind = DistKind::gmm2;
  s.components = reference_components();
  s.weights = {0.3, 0.2, 0.15, 0.35};
  return s;
}

DistributionSpec DistributionSpec::circle_annulus(double circle_weight) {
  DistributionSpec s;
  s.kind = DistKind::circle_annulus;
  s.weights = {circle_weight, 1.0 - circle_weight};
  return s;
}

DistributionSpec DistributionSpec::uniform_square() {
  DistributionSpec s;
  s.kind = DistKind::uniform_square;
  return s;
}

DistributionSpec DistributionSpec::custom_gmm(
    std::vector<GmmComponent> components, std::vector<double> weights) {
  DistributionSpec s;
  s.kind = DistKind::custom_gmm;
  s.components = std::move(components);
  s.weights = std::move(weights);
  s.validate();
  return s;
}

DistributionSpec DistributionSpec::from_name(const std::string& name) {
  if (name == "gmm1") return gmm1();
  if (name == "gmm2") return gmm2();
  if (name == "circle-annulus" || name == "circle_annulus") {
    return circle_annulus();
  }
  if (name == "uniform-square" || name == "uniform_square") {
    return uniform_square();
  }
  throw std::invalid_argument("unknown distribution: " + name);
}

const char* DistributionSpec::name() const {
  switch (kind) {
    case DistKind::gmm1:
      return "gmm1";
    case DistKind::gmm2:
      return "gmm2";
    case DistKind::circle_annulus:
      return "circle-annulus";
    case DistKind::uniform_square:
      return "uniform-square";
    case DistKind::custom_gmm:
      return "custom-gmm";
  }
  return "unknown";
}

void DistributionSpec::validate() const {
  const bool gmm = kind == DistKind::gmm1 || kind == DistKind::gmm2 ||
                   kind == DistKind::custom_gmm;
  if (gmm) {
    if (components.empty() || components.size() != weights.size()) {
      throw std::invalid_argument(
          "mixture needs matching component and weight counts");
    }
    for (const auto& c : components) {
      if (!(c.variance.minCoeff() > 0.0)) {
        throw std::invalid_argument("component variances must be positive");
      }
    }
  }
  if (kind == DistKind::circle_annulus) {
    if (weights.size() != 2) {
      throw std::invalid_argument("circle/annulus mixture needs two weights");
    }
    if (!(circle_radius > 0.0) || !(annulus_inner >= 0.0) ||
        !(annulus_outer > annulus_inner)) {
      throw std::invalid_argument("invalid circle/annulus radii");
    }
  }
  if (kind == DistKind::uniform_square && !(square_high > square_low)) {
    throw std::invalid_argument("invalid square bounds");
  }
  if (!weights.empty()) {
    double sum = 0.0;
    for (const double w : weights) {
      if (w < 0.0) throw std::invalid_argument("mixture weights must be >= 0");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("mixture weights must sum to 1");
    }
  }
}

Dataset sample(const DistributionSpec& spec, Index n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  spec.validate();
  SplitMix64 rng(seed);
  FeatureMatrix features(n, 2);
  std::optional<std::vector<std::int32_t>> labels;

  switch (spec.kind) {
    case DistKind::gmm1:
    case DistKind::gmm2:
    case DistKind::custom_gmm: {
      labels.emplace(static_cast<std::size_t>(n));
      for (Index i = 0; i < n; ++i) {
        const std::size_t c = pick_component(spec.weights, rng.uniform());
        double z0 = 0.0, z1 = 0.0;
        rng.normal_pair(z0, z1);
        const GmmComponent& comp = spec.components[c];
        features(i, 0) = comp.mean[0] + std::sqrt(comp.variance[0]) * z0;
        features(i, 1) = comp.mean[1] + std::sqrt(comp.variance[1]) * z1;
        (*labels)[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(c);
      }
      break;
    }
    case DistKind::circle_annulus: {
      labels.emplace(static_cast<std::size_t>(n));
      const double r_in_sq = spec.annulus_inner * spec.annulus_inner;
      const double r_out_sq = spec.annulus_outer * spec.annulus_outer;
      for (Index i = 0; i < n; ++i) {
        const bool in_circle = rng.uniform() < spec.weights[0];
        const double u = rng.uniform();
        const double theta = kTwoPi * rng.uniform();
        // Area-uniform radius: r = sqrt(u (r1^2 - r0^2) + r0^2).
        const double r = in_circle
                             ? spec.circle_radius * std::sqrt(u)
                             : std::sqrt(u * (r_out_sq - r_in_sq) + r_in_sq);
        features(i, 0) = r * std::cos(theta);
        features(i, 1) = r * std::sin(theta);
        (*labels)[static_cast<std::size_t>(i)] = in_circle ? 0 : 1;
      }
      break;
    }
    case DistKind::uniform_square: {
      const double span = spec.square_high - spec.square_low;
      for (Index i = 0; i < n; ++i) {
        features(i, 0) = spec.square_low + span * rng.uniform();
        features(i, 1) = spec.square_low + span * rng.uniform();
      }
      break;
    }
  }
  return make_dataset(std::move(features), std::move(labels));
}

DCriterionValue d_criterion(double d1, double d2) {
  if (d1 < 0.0 || d2 < 0.0) {
    throw std::invalid_argument("criterion values must be nonnegative");
  }
  if (d1 + d2 <= 1e-15) return {0.0, true};
  return {(d1 - d2) / (d1 + d2), false};
}

BenchReport run_comparison(const BenchConfig& config) {
  if (config.runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (config.distributions.empty() || config.ns.empty() ||
      config.fracs.empty()) {
    throw std::invalid_argument("bench config must be non-empty");
  }

  BenchReport report;
  report.config = config;
  report.rng_algorithm = kRngAlgorithm;
  report.rng_version = kRngVersion;
  for (const double f : config.fracs) {
    if (f <= 0.0) throw std::invalid_argument("budget fraction must be > 0");
    if (f > 0.2) {
      report.warnings.push_back(
          "budget fraction above the low-budget regime (m/n <= 0.2)");
      break;
    }
  }

  std::uint64_t stream = 0;
  for (const DistributionSpec& dist : config.distributions) {
    for (const Index n : config.ns) {
      for (const double frac : config.fracs) {
        BenchCell cell;
        cell.distribution = dist.name();
        cell.n = n;
        cell.frac = frac;
        cell.m = std::max<Index>(
            1, static_cast<Index>(std::llround(frac * static_cast<double>(n))));
        AlphaParam alpha;
        switch (config.alpha_rule) {
          case AlphaRule::ratio:
            alpha = AlphaParam::ratio(cell.m, n);
            break;
          case AlphaRule::auto_budget:
            alpha = AlphaParam::auto_budget(cell.m);
            break;
          case AlphaRule::explicit_value:
            alpha = AlphaParam::explicit_value(config.alpha_explicit);
            break;
        }
        cell.alpha = alpha.value;

        for (int run = 0; run < config.runs; ++run) {
          const std::uint64_t run_seed =
              derive_stream_seed(config.seed, stream++);
          cell.seeds.push_back(run_seed);
          const Dataset data = sample(dist, n, run_seed);
          const KernelContext ctx = KernelContext::build(
              data, KernelSpec::gaussian(median_bandwidth(data)));

          const SelectionResult r1 = gkhr(ctx, cell.m, alpha);
          const SelectionResult r2 = gkh(ctx, cell.m, alpha);
          const double d1 = alpha_mmd_sq(ctx, r1.indices, alpha.value);
          const double d2 = alpha_mmd_sq(ctx, r2.indices, alpha.value);
          const DCriterionValue d = d_criterion(d1, d2);
          cell.d_values.push_back(d.value);
          if (d.degenerate) ++cell.degenerate_runs;
          cell.gkhr_ms.push_back(r1.wall_ms);
          cell.gkh_ms.push_back(r2.wall_ms);
        }

        const double runs = static_cast<double>(cell.d_values.size());
        cell.d_mean =
            std::accumulate(cell.d_values.begin(), cell.d_values.end(), 0.0) /
            runs;
        if (cell.d_values.size() > 1) {
          double ss = 0.0;
          for (const double v : cell.d_values) {
            ss += (v - cell.d_mean) * (v - cell.d_mean);
          }
          cell.d_std = std::sqrt(ss / (runs - 1.0));
        }
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

}  // namespace kherd
