#pragma once

#include <Eigen/Dense>

namespace wqe {

/// Paired measurements and non-negative weights. Values may contain NaN,
/// which is treated as the missing-value sentinel.
struct WeightedSample {
  Eigen::ArrayXd values;
  Eigen::ArrayXd weights;

  WeightedSample(Eigen::ArrayXd values_, Eigen::ArrayXd weights_);

  /// Unit weights.
  WeightedSample(Eigen::ArrayXd values_);  // NOLINT(google-explicit-constructor)

  Eigen::Index size() const { return values.size(); }
};

/// Weighted order statistics: values sorted nondecreasing (stable in the
/// original index), weights carried along, plus normalized weights and the
/// cumulative cut points t_0..t_n with t_0 = 0 and t_n forced to exactly 1.
struct SortedWeightedSample {
  Eigen::ArrayXd ordered_values;
  Eigen::ArrayXd ordered_weights;
  Eigen::ArrayXd normalized_weights;
  Eigen::ArrayXd cut_points;  // size n+1

  Eigen::Index size() const { return ordered_values.size(); }
};

/// Removes pairs whose value is NaN. Throws if nothing remains or the
/// remaining weights sum to zero.
WeightedSample drop_missing(const WeightedSample& sample);

/// weights / sum(weights). Throws on zero sum.
Eigen::ArrayXd normalize_weights(const Eigen::ArrayXd& weights);

/// Sorts the sample (caller is expected to have run drop_missing) and builds
/// normalized weights and cut points.
SortedWeightedSample sort_and_cut(const WeightedSample& sample);

}  // namespace wqe
