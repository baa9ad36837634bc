#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wqe/estimators.hpp"

namespace {

Eigen::ArrayXd arr(std::initializer_list<double> xs) {
  Eigen::ArrayXd a(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) a[i++] = x;
  return a;
}

}  // namespace

TEST_CASE("EstimatorKind construction") {
  CHECK_THROWS_AS(wqe::EstimatorKind::hf(3), std::invalid_argument);
  CHECK_THROWS_AS(wqe::EstimatorKind::hf(10), std::invalid_argument);
  CHECK_THROWS_AS(wqe::EstimatorKind::thd(1.5), std::invalid_argument);
  CHECK_NOTHROW(wqe::EstimatorKind::hf(4));
  CHECK_NOTHROW(wqe::EstimatorKind::hf(9));
}

TEST_CASE("hd_cdf shapes and endpoint domain") {
  // (n*, p) -> Beta((n*+1)p, (n*+1)(1-p)); probe via the uniform special case.
  const auto cdf = wqe::hd_cdf(1.0, 0.5);  // shape (1, 1): identity on [0, 1]
  CHECK(cdf(0.3) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK_THROWS_AS(wqe::hd_cdf(5.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(wqe::hd_cdf(5.0, 1.0), std::domain_error);
  // n*=5, p=0.5 -> Beta(3,3); median of the symmetric shape is 0.5
  const auto cdf33 = wqe::hd_cdf(5.0, 0.5);
  CHECK(cdf33(0.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cdf33(0.2) == doctest::Approx(0.05792).epsilon(1e-9));
}

TEST_CASE("single positively weighted element always wins") {
  const wqe::WeightedSample one{arr({42.0}), arr({3.0})};
  for (double p : {0.1, 0.5, 0.9}) {
    CHECK(wqe::whd_quantile(one, p) == doctest::Approx(42.0).epsilon(1e-12));
    CHECK(wqe::wthd_quantile(one, p) == doctest::Approx(42.0).epsilon(1e-12));
    CHECK(wqe::whf_quantile(one, p, 7) == doctest::Approx(42.0).epsilon(1e-12));
  }
}

TEST_CASE("weighted HD worked examples") {
  // unit weights
  CHECK(wqe::whd_quantile({arr({1, 2, 4, 8, 16})}, 0.5) == doctest::Approx(5.04).epsilon(1e-3));
  // zero weights drop elements
  CHECK(wqe::whd_quantile({arr({1, 2, 3, 4, 5}), arr({1, 1, 0, 0, 1})}, 0.5) ==
        doctest::Approx(2.518519).epsilon(1e-6));
  // fractional weights
  const wqe::WeightedSample ex6{arr({1, 2, 3, 4, 5}), arr({0.4, 0.4, 0.05, 0.05, 0.1})};
  CHECK(wqe::whd_quantile(ex6, 0.5) == doctest::Approx(1.842).epsilon(1e-3));
  // heavy outlier
  const wqe::WeightedSample ex7{arr({1, 2, 3, 10000}), arr({0.1, 0.4, 0.4, 0.1})};
  CHECK(wqe::whd_quantile(ex7, 0.5) == doctest::Approx(292.594).epsilon(1e-4));
  CHECK_THROWS_AS(wqe::whd_quantile(ex7, 0.0), std::domain_error);
  CHECK_THROWS_AS(wqe::whd_quantile(ex7, 1.0), std::domain_error);
}

TEST_CASE("HD coefficients for the fractional-weight example") {
  const auto clean = wqe::drop_missing({arr({1, 2, 3, 4, 5}), arr({0.4, 0.4, 0.05, 0.05, 0.1})});
  const auto sorted = wqe::sort_and_cut(clean);
  const double n_star = wqe::kish_ess(clean.weights);
  CHECK(n_star == doctest::Approx(2.985).epsilon(1e-3));
  const auto w = wqe::coefficients(sorted, wqe::hd_cdf(n_star, 0.5));
  const double expected[] = {0.352, 0.543, 0.043, 0.033, 0.028};
  for (int i = 0; i < 5; ++i) {
    CHECK(std::fabs(w[i] - expected[i]) <= 5e-3);
  }
}

TEST_CASE("weighted THD worked example and width-1 identity") {
  const wqe::WeightedSample ex7{arr({1, 2, 3, 10000}), arr({0.1, 0.4, 0.4, 0.1})};
  CHECK(wqe::wthd_quantile(ex7, 0.5) == doctest::Approx(2.5).epsilon(1e-9));

  const auto clean = wqe::drop_missing(ex7);
  const auto sorted = wqe::sort_and_cut(clean);
  const double n_star = wqe::kish_ess(clean.weights);
  const double width = 1.0 / std::sqrt(n_star);
  const auto w = wqe::coefficients(sorted, wqe::thd_cdf(n_star, 0.5, width));
  const double expected[] = {0.0, 0.5, 0.5, 0.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::fabs(w[i] - expected[i]) <= 1e-9);
  }

  // width = 1 renormalization is the identity
  CHECK(wqe::wthd_quantile(ex7, 0.5, 1.0) ==
        doctest::Approx(wqe::whd_quantile(ex7, 0.5)).epsilon(1e-9));
  const auto thd1 = wqe::thd_cdf(3.0, 0.4, 1.0);
  const auto hd = wqe::hd_cdf(3.0, 0.4);
  for (int k = 0; k <= 20; ++k) {
    const double t = k / 20.0;
    CHECK(std::fabs(thd1(t) - hd(t)) <= 1e-12);
  }
}

TEST_CASE("thd_cdf saturates outside the HDI") {
  // n* ~ 2.941, width ~ 0.583 -> [L*, R*] ~ [0.208, 0.792]
  const auto cdf = wqe::thd_cdf(2.941, 0.5, 0.583);
  CHECK(cdf(0.0) == 0.0);
  CHECK(cdf(0.15) == 0.0);
  CHECK(cdf(0.85) == 1.0);
  CHECK(cdf(1.0) == 1.0);
  CHECK(cdf(0.5) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("hf_h positions") {
  CHECK(wqe::hf_h(7, 5.0, 0.25).h_star == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(wqe::hf_h(7, 5.0, 0.35).h_star == doctest::Approx(2.4).epsilon(1e-12));
  CHECK(wqe::hf_h(4, 10.0, 0.01).h_star == 1.0);  // clamped from 0.1
  CHECK(wqe::hf_h(6, 9.0, 0.99).h_star == doctest::Approx(9.0).epsilon(1e-12));  // clamped from 9.9
  CHECK_THROWS_AS(wqe::hf_h(3, 5.0, 0.5), std::invalid_argument);
}

TEST_CASE("hf_cdf piecewise segments") {
  {
    const auto cdf = wqe::hf_cdf(7, 3.0, 0.5);  // h* = 2, F(t) = 3t - 1 on [1/3, 2/3]
    CHECK(cdf(0.0) == 0.0);
    CHECK(cdf(1.0) == 1.0);
    CHECK(cdf(1.0 / 3.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cdf(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cdf(2.0 / 3.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
  {
    // integer h: the full mass falls on the second gap [0.2, 0.4]
    const auto cdf = wqe::hf_cdf(7, 5.0, 0.25);
    CHECK(cdf(0.2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cdf(0.4) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("weighted HF worked examples") {
  const wqe::WeightedSample ex10{arr({1, 2, 3, 4, 5}), arr({0.3, 0.1, 0, 0.1, 0.4})};
  CHECK(wqe::whf_quantile(ex10, 0.5, 7) == doctest::Approx(11.0 / 3.0).epsilon(1e-9));
  const auto clean = wqe::drop_missing(ex10);
  const auto sorted = wqe::sort_and_cut(clean);
  const auto w = wqe::coefficients(sorted, wqe::hf_cdf(7, wqe::kish_ess(clean.weights), 0.5));
  const double expected[] = {0.0, 1.0 / 3.0, 0.0, 1.0 / 3.0, 1.0 / 3.0};
  for (int i = 0; i < 5; ++i) {
    CHECK(std::fabs(w[i] - expected[i]) <= 1e-9);
  }

  CHECK(wqe::whf_quantile({arr({1, 2, 3, 4, 5})}, 0.35, 7) == doctest::Approx(2.4).epsilon(1e-9));
  CHECK(wqe::whf_quantile({arr({0, 1, 100}), arr({1, 0, 1})}, 0.5, 7) ==
        doctest::Approx(50.0).epsilon(1e-12));
}

TEST_CASE("estimate facade") {
  const wqe::WeightedSample ex6{arr({1, 2, 3, 4, 5}), arr({0.4, 0.4, 0.05, 0.05, 0.1})};
  const auto q = wqe::estimate(ex6, wqe::EstimatorKind::hd(), {0.5});
  REQUIRE(q.size() == 1);
  CHECK(q[0] == doctest::Approx(1.842).epsilon(1e-3));

  const auto extremes = wqe::estimate({arr({1, 2, 3, 4, 5})}, wqe::EstimatorKind::hf(7), {0.0, 1.0});
  CHECK(extremes[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(extremes[1] == doctest::Approx(5.0).epsilon(1e-12));

  const wqe::WeightedSample ex7{arr({1, 2, 3, 10000}), arr({0.1, 0.4, 0.4, 0.1})};
  const auto thd = wqe::estimate(ex7, wqe::EstimatorKind::thd(), {0.5});
  CHECK(thd[0] == doctest::Approx(2.5).epsilon(1e-9));

  CHECK_THROWS_WITH_AS(wqe::estimate(ex7, wqe::EstimatorKind::hd(), {0.5, 0.0}),
                       "estimate: probability at index 1 is outside the estimator's domain",
                       std::domain_error);
}
