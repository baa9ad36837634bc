#include "wqe/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wqe/special_functions.hpp"

namespace wqe {

EstimatorKind EstimatorKind::thd(std::optional<double> width) {
  if (width && !(*width > 0.0 && *width <= 1.0)) {
    throw std::invalid_argument("EstimatorKind: THD width must lie in (0, 1]");
  }
  return {Family::TrimmedHarrellDavis, width, 7};
}

EstimatorKind EstimatorKind::hf(int type) {
  if (type < 4 || type > 9) {
    throw std::invalid_argument("EstimatorKind: unsupported type " + std::to_string(type));
  }
  return {Family::HyndmanFan, {}, type};
}

Eigen::ArrayXd coefficients(const SortedWeightedSample& sample, const QuantileCdf& cdf) {
  const Eigen::Index n = sample.size();
  Eigen::ArrayXd w(n);
  double prev = cdf(sample.cut_points[0]);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double cur = cdf(sample.cut_points[i + 1]);
    w[i] = cur - prev;
    prev = cur;
  }
  return w;
}

double wquantile_generic(const SortedWeightedSample& sample, const QuantileCdf& cdf) {
  return (coefficients(sample, cdf) * sample.ordered_values).sum();
}

QuantileCdf hd_cdf(double n_star, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("hd_cdf: defined only for p in (0, 1)");
  }
  const BetaShape shape{(n_star + 1.0) * p, (n_star + 1.0) * (1.0 - p)};
  return [shape](double t) { return reg_inc_beta(t, shape); };
}

QuantileCdf thd_cdf(double n_star, double p, double width) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("thd_cdf: defined only for p in (0, 1)");
  }
  if (!(width > 0.0 && width <= 1.0)) {
    throw std::domain_error("thd_cdf: width must lie in (0, 1]");
  }
  const BetaShape shape{(n_star + 1.0) * p, (n_star + 1.0) * (1.0 - p)};
  const UnitInterval hdi = beta_hdi(shape, width);
  const double cdf_lo = reg_inc_beta(hdi.lo, shape);
  const double cdf_hi = reg_inc_beta(hdi.hi, shape);
  return [shape, hdi, cdf_lo, cdf_hi](double t) {
    const double clamped = std::clamp(t, hdi.lo, hdi.hi);
    return (reg_inc_beta(clamped, shape) - cdf_lo) / (cdf_hi - cdf_lo);
  };
}

HfPosition hf_h(int type, double n, double p) {
  if (type < 4 || type > 9) {
    throw std::invalid_argument("hf_h: unsupported type " + std::to_string(type));
  }
  double h = 0.0;
  switch (type) {
    case 4: h = n * p; break;
    case 5: h = n * p + 0.5; break;
    case 6: h = (n + 1.0) * p; break;
    case 7: h = (n - 1.0) * p + 1.0; break;
    case 8: h = (n + 1.0 / 3.0) * p + 1.0 / 3.0; break;
    case 9: h = (n + 0.25) * p + 0.375; break;
  }
  return {std::clamp(h, 1.0, n)};
}

QuantileCdf hf_cdf(int type, double n_star, double p) {
  const double h = hf_h(type, n_star, p).h_star;
  return [n_star, h](double t) {
    return std::clamp(t * n_star - h + 1.0, 0.0, 1.0);
  };
}

QuantileCdf make_cdf(const EstimatorKind& kind, double n_star, double p) {
  switch (kind.family) {
    case EstimatorKind::Family::HarrellDavis:
      return hd_cdf(n_star, p);
    case EstimatorKind::Family::TrimmedHarrellDavis:
      // rounding can push n* a hair under 1, and with it 1/sqrt(n*) over 1
      return thd_cdf(n_star, p, kind.width.value_or(std::min(1.0, 1.0 / std::sqrt(n_star))));
    case EstimatorKind::Family::HyndmanFan:
      return hf_cdf(kind.hf_type, n_star, p);
  }
  throw std::logic_error("make_cdf: unreachable");
}

namespace {

double estimate_one(const SortedWeightedSample& sorted, double n_star,
                    const EstimatorKind& kind, double p) {
  return wquantile_generic(sorted, make_cdf(kind, n_star, p));
}

}  // namespace

double whd_quantile(const WeightedSample& sample, double p, const EssKind& ess) {
  const WeightedSample clean = drop_missing(sample);
  const SortedWeightedSample sorted = sort_and_cut(clean);
  return estimate_one(sorted, effective_sample_size(clean.weights, ess), EstimatorKind::hd(), p);
}

double wthd_quantile(const WeightedSample& sample, double p, std::optional<double> width,
                     const EssKind& ess) {
  const WeightedSample clean = drop_missing(sample);
  const SortedWeightedSample sorted = sort_and_cut(clean);
  return estimate_one(sorted, effective_sample_size(clean.weights, ess),
                      EstimatorKind::thd(width), p);
}

double whf_quantile(const WeightedSample& sample, double p, int type, const EssKind& ess) {
  const WeightedSample clean = drop_missing(sample);
  const SortedWeightedSample sorted = sort_and_cut(clean);
  return estimate_one(sorted, effective_sample_size(clean.weights, ess),
                      EstimatorKind::hf(type), p);
}

std::vector<double> estimate(const WeightedSample& sample, const EstimatorKind& kind,
                             const std::vector<double>& probs, const EssKind& ess) {
  const WeightedSample clean = drop_missing(sample);
  const SortedWeightedSample sorted = sort_and_cut(clean);
  const double n_star = effective_sample_size(clean.weights, ess);

  std::vector<double> out;
  out.reserve(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double p = probs[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::domain_error("estimate: invalid probability at index " + std::to_string(i));
    }
    try {
      out.push_back(estimate_one(sorted, n_star, kind, p));
    } catch (const std::domain_error&) {
      throw std::domain_error("estimate: probability at index " + std::to_string(i) +
                              " is outside the estimator's domain");
    }
  }
  return out;
}

}  // namespace wqe
