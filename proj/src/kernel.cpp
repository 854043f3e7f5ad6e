#include "kherd/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "kherd/rng.hpp"
#include "parallel.hpp"

namespace kherd {

namespace {

double eval_from_sq_dist(const KernelSpec& spec, double sq_dist) {
  switch (spec.kind) {
    case KernelKind::gaussian:
      return std::exp(-sq_dist / (spec.bandwidth * spec.bandwidth));
    case KernelKind::laplacian:
      return std::exp(-std::sqrt(sq_dist) / spec.bandwidth);
    default:
      throw std::logic_error("not a radial kernel");
  }
}

double eval_pair(const KernelSpec& spec, const FeatureMatrix& f, Index i,
                 Index j) {
  if (spec.kind == KernelKind::polynomial) {
    return std::pow(f.row(i).dot(f.row(j)) + spec.offset, spec.degree);
  }
  return eval_from_sq_dist(spec, (f.row(i) - f.row(j)).squaredNorm());
}

}  // namespace

KernelSpec KernelSpec::gaussian(double sigma) {
  KernelSpec s;
  s.kind = KernelKind::gaussian;
  s.bandwidth = sigma;
  s.validate();
  return s;
}

KernelSpec KernelSpec::laplacian(double sigma) {
  KernelSpec s;
  s.kind = KernelKind::laplacian;
  s.bandwidth = sigma;
  s.validate();
  return s;
}

KernelSpec KernelSpec::polynomial(double degree, double offset) {
  KernelSpec s;
  s.kind = KernelKind::polynomial;
  s.degree = degree;
  s.offset = offset;
  s.validate();
  return s;
}

void KernelSpec::validate() const {
  switch (kind) {
    case KernelKind::gaussian:
    case KernelKind::laplacian:
      if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
        throw std::invalid_argument("kernel bandwidth must be positive");
      }
      break;
    case KernelKind::polynomial:
      if (degree < 1.0 || degree != std::floor(degree)) {
        throw std::invalid_argument(
            "polynomial degree must be an integer >= 1");
      }
      if (!std::isfinite(offset)) {
        throw std::invalid_argument("polynomial offset must be finite");
      }
      break;
  }
}

const char* kernel_kind_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::gaussian:
      return "gaussian";
    case KernelKind::laplacian:
      return "laplacian";
    case KernelKind::polynomial:
      return "polynomial";
  }
  return "unknown";
}

KernelKind kernel_kind_from_name(const std::string& name) {
  if (name == "gaussian") return KernelKind::gaussian;
  if (name == "laplacian") return KernelKind::laplacian;
  if (name == "polynomial") return KernelKind::polynomial;
  throw std::invalid_argument("unknown kernel kind: " + name);
}

double kernel_eval(const KernelSpec& spec,
                   Eigen::Ref<const Eigen::RowVectorXd> x,
                   Eigen::Ref<const Eigen::RowVectorXd> y) {
  spec.validate();
  if (x.size() != y.size()) {
    throw std::invalid_argument("kernel_eval: dimension mismatch");
  }
  if (!x.allFinite() || !y.allFinite()) {
    throw std::invalid_argument("kernel_eval: non-finite input");
  }
  if (spec.kind == KernelKind::polynomial) {
    return std::pow(x.dot(y) + spec.offset, spec.degree);
  }
  return eval_from_sq_dist(spec, (x - y).squaredNorm());
}

double median_bandwidth(const Dataset& dataset, const MedianOptions& options) {
  const Index n = dataset.n();
  if (n < 2) {
    throw std::invalid_argument("median_bandwidth needs at least two samples");
  }

  // Self-pairs are excluded: they are identically zero and would drag the
  // median toward 0. Zero distances between distinct identical rows stay in.
  std::vector<Index> rows(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), Index{0});
  if (n > options.exact_limit) {
    SplitMix64 rng(options.subsample_seed);
    for (Index i = 0; i < options.exact_limit; ++i) {
      const Index j =
          i + static_cast<Index>(rng.uniform_below(
                  static_cast<std::uint64_t>(n - i)));
      std::swap(rows[static_cast<std::size_t>(i)],
                rows[static_cast<std::size_t>(j)]);
    }
    rows.resize(static_cast<std::size_t>(options.exact_limit));
    std::sort(rows.begin(), rows.end());
  }

  const Index s = static_cast<Index>(rows.size());
  std::vector<double> dists;
  dists.reserve(static_cast<std::size_t>(s) * (s - 1) / 2);
  for (Index a = 0; a < s; ++a) {
    for (Index b = a + 1; b < s; ++b) {
      dists.push_back(
          (dataset.features.row(rows[a]) - dataset.features.row(rows[b]))
              .norm());
    }
  }

  const std::size_t count = dists.size();
  const std::size_t upper = count / 2;
  std::nth_element(dists.begin(), dists.begin() + upper, dists.end());
  double median = dists[upper];
  if (count % 2 == 0) {
    const double lower =
        *std::max_element(dists.begin(), dists.begin() + upper);
    median = 0.5 * (lower + median);
  }
  if (!(median > 0.0)) {
    throw std::invalid_argument("degenerate dataset: median distance is zero");
  }
  return median;
}

KernelContext KernelContext::build(std::shared_ptr<const Dataset> dataset,
                                   KernelSpec spec,
                                   const ContextOptions& options) {
  if (!dataset) throw std::invalid_argument("null dataset");
  dataset->validate();
  spec.validate();

  KernelContext ctx;
  ctx.dataset_ = std::move(dataset);
  ctx.spec_ = spec;

  const Index n = ctx.dataset_->n();
  const FeatureMatrix& f = ctx.dataset_->features;

  if (options.cache_gram) {
    Eigen::MatrixXd gram(n, n);
    // Upper triangle once, mirrored, so symmetry holds exactly.
    detail::parallel_chunks(n, options.threads, [&](Index begin, Index end) {
      for (Index i = begin; i < end; ++i) {
        for (Index j = i; j < n; ++j) {
          const double v = eval_pair(spec, f, i, j);
          gram(i, j) = v;
          gram(j, i) = v;
        }
      }
    });
    ctx.mu_.resize(n);
    detail::parallel_chunks(n, options.threads, [&](Index begin, Index end) {
      for (Index i = begin; i < end; ++i) {
        double acc = 0.0;
        for (Index j = 0; j < n; ++j) acc += gram(i, j);
        ctx.mu_[i] = acc / static_cast<double>(n);
      }
    });
    ctx.gram_ = std::move(gram);
  } else {
    ctx.mu_.resize(n);
    detail::parallel_chunks(n, options.threads, [&](Index begin, Index end) {
      for (Index i = begin; i < end; ++i) {
        double acc = 0.0;
        for (Index j = 0; j < n; ++j) acc += eval_pair(spec, f, j, i);
        ctx.mu_[i] = acc / static_cast<double>(n);
      }
    });
  }

  double kbar = 0.0;
  for (Index i = 0; i < n; ++i) kbar += ctx.mu_[i];
  ctx.kbar_ = kbar / static_cast<double>(n);

  if (spec.kind == KernelKind::polynomial) {
    double kmax = 0.0;
    for (Index i = 0; i < n; ++i) {
      kmax = std::max(kmax, eval_pair(spec, f, i, i));
    }
    ctx.kmax_ = kmax;
  } else {
    ctx.kmax_ = 1.0;
  }
  return ctx;
}

KernelContext KernelContext::build(Dataset dataset, KernelSpec spec,
                                   const ContextOptions& options) {
  return build(std::make_shared<const Dataset>(std::move(dataset)), spec,
               options);
}

const Eigen::MatrixXd& KernelContext::gram() const {
  if (!gram_) throw std::logic_error("gram matrix was not cached");
  return *gram_;
}

double KernelContext::k(Index i, Index j) const {
  if (gram_) return (*gram_)(i, j);
  return eval_pair(spec_, dataset_->features, i, j);
}

void KernelContext::kernel_row(Index row, Eigen::VectorXd& out) const {
  const Index n = dataset_->n();
  out.resize(n);
  if (gram_) {
    out = gram_->row(row);
    return;
  }
  const FeatureMatrix& f = dataset_->features;
  for (Index i = 0; i < n; ++i) out[i] = eval_pair(spec_, f, row, i);
}

}  // namespace kherd
