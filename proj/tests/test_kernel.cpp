#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "kherd/kernel.hpp"
#include "naive_oracle.hpp"

using namespace kherd;

namespace {

Dataset line_dataset(std::initializer_list<double> xs) {
  FeatureMatrix f(static_cast<Index>(xs.size()), 1);
  Index i = 0;
  for (const double x : xs) f(i++, 0) = x;
  return make_dataset(std::move(f));
}

}  // namespace

TEST_CASE("gaussian kernel point evaluations") {
  const KernelSpec spec = KernelSpec::gaussian(1.0);
  Eigen::RowVectorXd x(1), y(1);

  x << 0.7;
  CHECK(kernel_eval(spec, x, x) == 1.0);

  x << 0.0;
  y << 1.0;
  CHECK(kernel_eval(spec, x, y) ==
        doctest::Approx(0.36787944117144233).epsilon(1e-14));

  const KernelSpec wide = KernelSpec::gaussian(2.0);
  y << 2.0;
  CHECK(kernel_eval(wide, x, y) ==
        doctest::Approx(0.36787944117144233).epsilon(1e-14));
}

TEST_CASE("kernel eval rejects bad input") {
  const KernelSpec spec = KernelSpec::gaussian(1.0);
  Eigen::RowVectorXd x(2), y(3);
  x << 0.0, 0.0;
  y << 0.0, 0.0, 0.0;
  CHECK_THROWS_AS(kernel_eval(spec, x, y), std::invalid_argument);

  Eigen::RowVectorXd bad(2);
  bad << 0.0, std::numeric_limits<double>::quiet_NaN();
  Eigen::RowVectorXd ok(2);
  ok << 0.0, 0.0;
  CHECK_THROWS_AS(kernel_eval(spec, bad, ok), std::invalid_argument);

  CHECK_THROWS_AS(KernelSpec::gaussian(0.0), std::invalid_argument);
  CHECK_THROWS_AS(KernelSpec::gaussian(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(KernelSpec::polynomial(1.5, 0.0), std::invalid_argument);
}

TEST_CASE("kernel symmetry and boundedness") {
  SplitMix64 rng(11);
  const FeatureMatrix f = naive::random_features(20, 3, rng);
  const KernelSpec spec = KernelSpec::gaussian(0.8);
  for (Index i = 0; i < f.rows(); ++i) {
    for (Index j = 0; j < f.rows(); ++j) {
      const double kij = kernel_eval(spec, f.row(i), f.row(j));
      const double kji = kernel_eval(spec, f.row(j), f.row(i));
      CHECK(kij == kji);
      CHECK(kij > 0.0);
      CHECK(kij <= 1.0);
      if (i != j) CHECK(kij < 1.0);
    }
  }
}

TEST_CASE("median bandwidth golden cases") {
  CHECK(median_bandwidth(line_dataset({0.0, 5.0})) == 5.0);
  // distances {1, 3, 2} -> sorted {1, 2, 3} -> median 2
  CHECK(median_bandwidth(line_dataset({0.0, 1.0, 3.0})) == 2.0);
  CHECK_THROWS_AS(median_bandwidth(line_dataset({0.0, 0.0, 0.0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(median_bandwidth(line_dataset({1.0})),
                  std::invalid_argument);
}

TEST_CASE("median bandwidth averages the middle pair for even counts") {
  // 4 points -> 6 distances {1,2,3,1,2,1} -> sorted {1,1,1,2,2,3} -> 1.5
  CHECK(median_bandwidth(line_dataset({0.0, 1.0, 2.0, 3.0})) == 1.5);
}

TEST_CASE("median bandwidth scales linearly") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 2 + static_cast<Index>(rng.uniform_below(30));
    FeatureMatrix f = naive::random_features(n, 2, rng);
    const double c = 0.1 + 5.0 * rng.uniform();
    Dataset base = make_dataset(f);
    Dataset scaled = make_dataset(FeatureMatrix(c * f));
    const double lhs = median_bandwidth(scaled);
    const double rhs = c * median_bandwidth(base);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("median bandwidth keeps zero distances between duplicate rows") {
  // pairs: (0,0):0, (0,5):5, (0,5):5 -> median 5;
  // with the duplicate's zero kept in the pool the median is the middle value.
  const double sigma = median_bandwidth(line_dataset({0.0, 0.0, 5.0}));
  CHECK(sigma == 5.0);
}

TEST_CASE("subsampled median stays deterministic and close to exact") {
  SplitMix64 rng(99);
  const FeatureMatrix f = naive::random_features(600, 2, rng);
  const Dataset ds = make_dataset(f);
  MedianOptions opt;
  opt.exact_limit = 200;
  const double a = median_bandwidth(ds, opt);
  const double b = median_bandwidth(ds, opt);
  CHECK(a == b);
  const double exact = median_bandwidth(ds);
  CHECK(a == doctest::Approx(exact).epsilon(0.15));
}

TEST_CASE("context mu matches hand evaluation") {
  const Dataset ds = line_dataset({0.0, 1.0, 2.0});
  const KernelContext ctx =
      KernelContext::build(ds, KernelSpec::gaussian(1.0));
  REQUIRE(ctx.mu().size() == 3);
  CHECK(ctx.mu()[0] == doctest::Approx(0.4620650266867255).epsilon(1e-14));
  CHECK(ctx.mu()[1] == doctest::Approx(0.5785862941142949).epsilon(1e-14));
  CHECK(ctx.mu()[2] == doctest::Approx(0.4620650266867255).epsilon(1e-14));
  CHECK(ctx.kmax() == 1.0);
}

TEST_CASE("single point context") {
  const Dataset ds = line_dataset({3.0});
  const KernelContext ctx =
      KernelContext::build(ds, KernelSpec::gaussian(1.0));
  CHECK(ctx.mu()[0] == 1.0);
  CHECK(ctx.kbar() == 1.0);
}

TEST_CASE("context construction is deterministic across thread counts") {
  SplitMix64 rng(3);
  const FeatureMatrix f = naive::random_features(513, 4, rng);
  const Dataset ds = make_dataset(f);
  const KernelSpec spec = KernelSpec::gaussian(0.9);
  ContextOptions serial, four;
  serial.threads = 1;
  four.threads = 4;
  const KernelContext a = KernelContext::build(ds, spec, serial);
  const KernelContext b = KernelContext::build(ds, spec, four);
  const KernelContext c = KernelContext::build(ds, spec, four);
  for (Index i = 0; i < a.mu().size(); ++i) {
    CHECK(a.mu()[i] == b.mu()[i]);
    CHECK(b.mu()[i] == c.mu()[i]);
  }
  CHECK(a.kbar() == b.kbar());
}

TEST_CASE("dataset validation") {
  FeatureMatrix empty(0, 0);
  CHECK_THROWS_AS(make_dataset(empty), std::invalid_argument);
  FeatureMatrix bad(2, 1);
  bad << 0.0, std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(make_dataset(bad), std::invalid_argument);
  FeatureMatrix fine(2, 1);
  fine << 0.0, 1.0;
  CHECK_THROWS_AS(make_dataset(fine, std::vector<std::int32_t>{1}),
                  std::invalid_argument);
  CHECK_NOTHROW(make_dataset(fine, std::vector<std::int32_t>{1, 0}));
}

TEST_CASE("cached gram agrees with lazy evaluation") {
  SplitMix64 rng(5);
  const FeatureMatrix f = naive::random_features(40, 3, rng);
  const Dataset ds = make_dataset(f);
  const KernelSpec spec = KernelSpec::gaussian(1.3);
  ContextOptions opt;
  opt.cache_gram = true;
  const KernelContext cached = KernelContext::build(ds, spec, opt);
  const KernelContext lazy = KernelContext::build(ds, spec);

  REQUIRE(cached.has_gram());
  const auto& g = cached.gram();
  for (Index i = 0; i < ds.n(); ++i) {
    // exact symmetry and unit diagonal
    CHECK(g(i, i) == 1.0);
    for (Index j = 0; j < ds.n(); ++j) {
      CHECK(g(i, j) == g(j, i));
      CHECK(g(i, j) == lazy.k(i, j));
    }
    // mu consistency against the cached rows
    double row_sum = 0.0;
    for (Index j = 0; j < ds.n(); ++j) row_sum += g(i, j);
    CHECK(std::abs(cached.mu()[i] - row_sum / static_cast<double>(ds.n())) <=
          1e-12);
    CHECK(cached.mu()[i] > 0.0);
    CHECK(cached.mu()[i] <= cached.kmax());
  }
}

TEST_CASE("gaussian gram matrices are positive semidefinite") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = 3 + static_cast<Index>(rng.uniform_below(18));
    const Dataset ds = make_dataset(naive::random_features(n, 2, rng));
    ContextOptions opt;
    opt.cache_gram = true;
    const KernelContext ctx =
        KernelContext::build(ds, KernelSpec::gaussian(1.0), opt);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
        ctx.gram(), Eigen::EigenvaluesOnly);
    CHECK(eig.eigenvalues().minCoeff() >= -1e-8);
  }
}

TEST_CASE("laplacian and polynomial kernels evaluate") {
  Eigen::RowVectorXd x(1), y(1);
  x << 0.0;
  y << 2.0;
  CHECK(kernel_eval(KernelSpec::laplacian(2.0), x, y) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(kernel_eval(KernelSpec::polynomial(2, 1.0), x, y) == 1.0);
  x << 3.0;
  CHECK(kernel_eval(KernelSpec::polynomial(2, 1.0), x, y) == 49.0);
}
