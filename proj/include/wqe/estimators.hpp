#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "wqe/ess.hpp"
#include "wqe/weighted_sample.hpp"

namespace wqe {

/// A CDF over [0, 1]: F(0)=0, F(1)=1, nondecreasing. The quantile estimators
/// differ only in which CDF assigns mass to the cut-point gaps.
using QuantileCdf = std::function<double(double)>;

/// User-facing estimator taxonomy: Harrell-Davis, trimmed Harrell-Davis
/// (width defaults to 1/sqrt(n*) when absent), or Hyndman-Fan type 4..9.
struct EstimatorKind {
  enum class Family { HarrellDavis, TrimmedHarrellDavis, HyndmanFan };

  Family family = Family::HarrellDavis;
  std::optional<double> width;  // THD only
  int hf_type = 7;              // HF only

  static EstimatorKind hd() { return {Family::HarrellDavis, {}, 7}; }
  static EstimatorKind thd(std::optional<double> width = {});
  static EstimatorKind hf(int type);
};

/// Hyndman-Fan position h clamped to [1, n].
struct HfPosition {
  double h_star;
};

/// W_i = F(t_i) - F(t_{i-1}) for the sample's cut points.
Eigen::ArrayXd coefficients(const SortedWeightedSample& sample, const QuantileCdf& cdf);

/// sum W_i * x_(i) with W from `coefficients`.
double wquantile_generic(const SortedWeightedSample& sample, const QuantileCdf& cdf);

/// t -> I_t(alpha*, beta*) with alpha* = (n*+1)p, beta* = (n*+1)(1-p).
/// Defined only for p in (0, 1); throws std::domain_error at the endpoints.
QuantileCdf hd_cdf(double n_star, double p);

/// The HD cdf restricted to the highest density interval [L*, R*] of the
/// given width and renormalized: 0 below L*, 1 above R*.
QuantileCdf thd_cdf(double n_star, double p, double width);

/// Position h per the Hyndman-Fan taxonomy (types 4..9), clamped to [1, n].
HfPosition hf_h(int type, double n, double p);

/// Piecewise-linear CDF of U((h*-1)/n*, h*/n*): t -> clamp(t n* - h* + 1, 0, 1).
QuantileCdf hf_cdf(int type, double n_star, double p);

/// Weighted Harrell-Davis quantile estimate.
double whd_quantile(const WeightedSample& sample, double p, const EssKind& ess = EssKind::kish());

/// Weighted trimmed Harrell-Davis quantile estimate; width defaults to 1/sqrt(n*).
double wthd_quantile(const WeightedSample& sample, double p, std::optional<double> width = {},
                     const EssKind& ess = EssKind::kish());

/// Weighted Hyndman-Fan quantile estimate, type 4..9.
double whf_quantile(const WeightedSample& sample, double p, int type = 7,
                    const EssKind& ess = EssKind::kish());

/// Batch facade: sorting and cut points are shared across probabilities.
std::vector<double> estimate(const WeightedSample& sample, const EstimatorKind& kind,
                             const std::vector<double>& probs,
                             const EssKind& ess = EssKind::kish());

/// The CDF the given kind uses for (n*, p); exposed for coefficient inspection.
QuantileCdf make_cdf(const EstimatorKind& kind, double n_star, double p);

}  // namespace wqe
