#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "wqe/ess.hpp"
#include "wqe/random.hpp"
#include "wqe/weighted_sample.hpp"

namespace {

Eigen::ArrayXd arr(std::initializer_list<double> xs) {
  Eigen::ArrayXd a(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) a[i++] = x;
  return a;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("kish_ess worked values") {
  CHECK(wqe::kish_ess(arr({1, 1, 1})) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(wqe::kish_ess(arr({2, 2, 2})) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(wqe::kish_ess(arr({1, 1, 1, 0, 0})) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(wqe::kish_ess(arr({1, 1, 1, 0.00001})) == doctest::Approx(3.00002).epsilon(1e-5));
  CHECK(wqe::kish_ess(arr({1, 2, 3, 4, 5})) == doctest::Approx(45.0 / 11.0).epsilon(1e-12));
}

TEST_CASE("kish_ess domain errors") {
  CHECK_THROWS_AS(wqe::kish_ess(arr({0, 0, 0})), std::domain_error);
  CHECK_THROWS_AS(wqe::kish_ess(arr({1, -1})), std::domain_error);
}

TEST_CASE("huggins_roy_ess piecewise values") {
  const auto w = wqe::normalize_weights(arr({1, 2, 3, 4, 5}));
  CHECK(wqe::huggins_roy_ess(w, 2.0) == doctest::Approx(wqe::kish_ess(arr({1, 2, 3, 4, 5}))).epsilon(1e-12));
  CHECK(wqe::huggins_roy_ess(arr({0.5, 0.5, 0.0}), 0.0) == 2.0);
  CHECK(wqe::huggins_roy_ess(arr({0.5, 0.25, 0.25}), kInf) == doctest::Approx(2.0).epsilon(1e-14));
  for (int n : {1, 4, 10}) {
    Eigen::ArrayXd u = Eigen::ArrayXd::Constant(n, 1.0 / n);
    CHECK(wqe::huggins_roy_ess(u, 1.0) == doctest::Approx(double(n)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(wqe::huggins_roy_ess(arr({0.5, 0.6}), 2.0), std::domain_error);
}

TEST_CASE("zero-weight padding never changes ESS") {
  wqe::Rng rng(11);
  const double betas[] = {0.0, 0.5, 1.0, 2.0, 4.0, kInf};
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 1 + int(rng.uniform(0, 10));
    Eigen::ArrayXd w(n);
    for (int i = 0; i < n; ++i) w[i] = rng.uniform(0.01, 5.0);
    Eigen::ArrayXd padded(n + 3);
    padded << w, 0.0, 0.0, 0.0;
    const auto wn = wqe::normalize_weights(w);
    const auto pn = wqe::normalize_weights(padded);
    for (double beta : betas) {
      CHECK(wqe::huggins_roy_ess(wn, beta) ==
            doctest::Approx(wqe::huggins_roy_ess(pn, beta)).epsilon(1e-12));
    }
    CHECK(wqe::kish_ess(w) == doctest::Approx(wqe::kish_ess(padded)).epsilon(1e-12));
  }
}

TEST_CASE("kish_ess scale invariance and range") {
  wqe::Rng rng(12);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + int(rng.uniform(0, 20));
    Eigen::ArrayXd w(n);
    for (int i = 0; i < n; ++i) w[i] = rng.uniform(0.001, 10.0);
    const double c = rng.uniform(0.01, 100.0);
    CHECK(std::fabs(wqe::kish_ess(c * w) - wqe::kish_ess(w)) <=
          1e-12 * wqe::kish_ess(w));
    const auto wn = wqe::normalize_weights(w);
    for (double beta : {0.0, 0.5, 1.0, 2.0, 4.0, kInf}) {
      const double ess = wqe::huggins_roy_ess(wn, beta);
      CHECK(ess >= 1.0 - 1e-12);
      CHECK(ess <= n + 1e-9);
    }
  }
}

TEST_CASE("ESS_beta is continuous at beta = 1") {
  wqe::Rng rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + int(rng.uniform(0, 15));
    Eigen::ArrayXd w(n);
    for (int i = 0; i < n; ++i) w[i] = rng.uniform(0.01, 3.0);
    const auto wn = wqe::normalize_weights(w);
    const double at1 = wqe::huggins_roy_ess(wn, 1.0);
    CHECK(std::fabs(wqe::huggins_roy_ess(wn, 1.0 + 1e-6) - at1) <= 1e-3);
    CHECK(std::fabs(wqe::huggins_roy_ess(wn, 1.0 - 1e-6) - at1) <= 1e-3);
  }
}

TEST_CASE("effective_sample_size dispatch: Kish equals HugginsRoy(2)") {
  const auto w = arr({0.4, 0.4, 0.05, 0.05, 0.1});
  CHECK(wqe::effective_sample_size(w, wqe::EssKind::kish()) ==
        doctest::Approx(wqe::effective_sample_size(w, wqe::EssKind::huggins_roy(2.0)))
            .epsilon(1e-12));
  CHECK(wqe::effective_sample_size(w, wqe::EssKind::kish()) == doctest::Approx(2.985).epsilon(1e-3));
}
