#pragma once

#include <memory>
#include <optional>
#include <string>

#include "kherd/dataset.hpp"

namespace kherd {

enum class KernelKind { gaussian, laplacian, polynomial };

// Similarity kernel. Gaussian is exp(-||x-y||^2 / sigma^2), Laplacian is
// exp(-||x-y|| / sigma), polynomial is (<x,y> + offset)^degree. Only the
// Gaussian and Laplacian kernels are characteristic; the polynomial kernel is
// offered for completeness and callers are expected to warn on it.
struct KernelSpec {
  KernelKind kind = KernelKind::gaussian;
  double bandwidth = 1.0;  // sigma, gaussian/laplacian
  double degree = 2.0;     // polynomial
  double offset = 1.0;     // polynomial

  static KernelSpec gaussian(double sigma);
  static KernelSpec laplacian(double sigma);
  static KernelSpec polynomial(double degree, double offset);

  void validate() const;
  bool characteristic() const { return kind != KernelKind::polynomial; }
};

const char* kernel_kind_name(KernelKind kind);
KernelKind kernel_kind_from_name(const std::string& name);

// k(x, y) for a single point pair. Throws on dimension mismatch or
// non-finite input.
double kernel_eval(const KernelSpec& spec,
                   Eigen::Ref<const Eigen::RowVectorXd> x,
                   Eigen::Ref<const Eigen::RowVectorXd> y);

struct MedianOptions {
  // Above this many points the median is taken over all pairs of a seeded
  // uniform subsample of this size; below it, over all exact pairs.
  Index exact_limit = 10000;
  std::uint64_t subsample_seed = 0x6d656469616eULL;
};

// Median of Euclidean distances over unordered distinct pairs {i < j}. Even
// pair counts average the two middle order statistics. Throws for n < 2 and
// for an all-zero distance set ("degenerate dataset").
double median_bandwidth(const Dataset& dataset,
                        const MedianOptions& options = {});

struct ContextOptions {
  bool cache_gram = false;
  int threads = 0;  // 0 = hardware concurrency
};

// Immutable per-dataset kernel state: the mean-similarity vector mu with
// mu[i] = (1/n) sum_j k(x_j, x_i), the grand mean kbar = (1/n^2) 1'K1, the
// k(x,x) upper bound, and optionally the dense Gram matrix. Construction is
// one O(n^2) pass; rows may be evaluated on worker threads but each mu[i] is
// a single left-to-right reduction, so the result does not depend on the
// thread count.
class KernelContext {
 public:
  static KernelContext build(std::shared_ptr<const Dataset> dataset,
                             KernelSpec spec,
                             const ContextOptions& options = {});
  static KernelContext build(Dataset dataset, KernelSpec spec,
                             const ContextOptions& options = {});

  const Dataset& dataset() const { return *dataset_; }
  std::shared_ptr<const Dataset> dataset_ptr() const { return dataset_; }
  const KernelSpec& spec() const { return spec_; }
  Index n() const { return dataset_->n(); }

  const Eigen::VectorXd& mu() const { return mu_; }
  double kbar() const { return kbar_; }
  double kmax() const { return kmax_; }
  bool has_gram() const { return gram_.has_value(); }
  const Eigen::MatrixXd& gram() const;

  // k(x_i, x_j) by index.
  double k(Index i, Index j) const;

  // Fills out[i] = k(x_row, x_i) for all i, reading the cached Gram row when
  // available and recomputing from features otherwise.
  void kernel_row(Index row, Eigen::VectorXd& out) const;

 private:
  KernelContext() = default;

  std::shared_ptr<const Dataset> dataset_;
  KernelSpec spec_;
  Eigen::VectorXd mu_;
  double kbar_ = 0.0;
  double kmax_ = 1.0;
  std::optional<Eigen::MatrixXd> gram_;
};

}  // namespace kherd
