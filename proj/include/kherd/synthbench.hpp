#pragma once

#include <string>
#include <vector>

#include "kherd/dataset.hpp"
#include "kherd/discrepancy.hpp"

namespace kherd {

enum class DistKind { gmm1, gmm2, circle_annulus, uniform_square, custom_gmm };

struct GmmComponent {
  Eigen::Vector2d mean;
  Eigen::Vector2d variance;  // diagonal covariance
};

// A 2-D sampling distribution. The two reference mixtures share four Gaussian
// components and differ only in mixture weights; the circle/annulus mixture
// weights default to 0.5/0.5 and are exposed as parameters.
struct DistributionSpec {
  DistKind kind = DistKind::uniform_square;
  std::vector<GmmComponent> components;  // gmm kinds
  std::vector<double> weights;           // gmm kinds + circle_annulus (2)
  double circle_radius = 0.5;
  double annulus_inner = 4.0;
  double annulus_outer = 6.0;
  double square_low = -10.0;
  double square_high = 10.0;

  static DistributionSpec gmm1();
  static DistributionSpec gmm2();
  static DistributionSpec circle_annulus(double circle_weight = 0.5);
  static DistributionSpec uniform_square();
  static DistributionSpec custom_gmm(std::vector<GmmComponent> components,
                                     std::vector<double> weights);
  // Accepts "gmm1", "gmm2", "circle-annulus", "uniform-square".
  static DistributionSpec from_name(const std::string& name);

  const char* name() const;
  void validate() const;
};

// n i.i.d. draws; d = 2. Labels carry the mixture component (gmm kinds) or
// circle=0 / annulus=1; the uniform square is unlabelled. Deterministic per
// (spec, n, seed).
Dataset sample(const DistributionSpec& spec, Index n, std::uint64_t seed);

struct DCriterionValue {
  double value = 0.0;
  bool degenerate = false;  // both criteria at exactly zero
};

// Normalised performance gap (d1 - d2) / (d1 + d2) in [-1, 1]; positive means
// the with-replacement variant won. d1, d2 must be nonnegative.
DCriterionValue d_criterion(double d1, double d2);

struct BenchConfig {
  std::vector<DistributionSpec> distributions;
  std::vector<Index> ns;
  std::vector<double> fracs;  // budget fractions m/n, expected <= 0.2
  int runs = 10;
  AlphaRule alpha_rule = AlphaRule::ratio;
  double alpha_explicit = 1.0;
  std::uint64_t seed = 0;
};

struct BenchCell {
  std::string distribution;
  Index n = 0;
  double frac = 0.0;
  Index m = 0;
  double alpha = 0.0;
  std::vector<double> d_values;
  double d_mean = 0.0;
  double d_std = 0.0;
  int degenerate_runs = 0;
  std::vector<std::uint64_t> seeds;     // per-run derived stream seeds
  std::vector<double> gkhr_ms;          // selection-loop wall time per run
  std::vector<double> gkh_ms;
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchCell> cells;
  std::string rng_algorithm;
  int rng_version = 0;
  std::vector<std::string> warnings;
};

// For every (distribution, n, frac) cell and run: fresh seeded sample,
// median-bandwidth Gaussian kernel, both herding variants, one D value.
BenchReport run_comparison(const BenchConfig& config);

}  // namespace kherd
