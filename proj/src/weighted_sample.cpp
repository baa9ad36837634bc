#include "wqe/weighted_sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wqe {

WeightedSample::WeightedSample(Eigen::ArrayXd values_, Eigen::ArrayXd weights_)
    : values(std::move(values_)), weights(std::move(weights_)) {
  if (values.size() != weights.size() || values.size() == 0) {
    throw std::invalid_argument("WeightedSample: values and weights must have equal, positive length");
  }
  if ((weights < 0.0).any() || !weights.isFinite().all()) {
    throw std::invalid_argument("WeightedSample: weights must be finite and non-negative");
  }
}

WeightedSample::WeightedSample(Eigen::ArrayXd values_)
    : WeightedSample(values_, Eigen::ArrayXd::Ones(values_.size())) {}

WeightedSample drop_missing(const WeightedSample& sample) {
  std::vector<double> values;
  std::vector<double> weights;
  values.reserve(sample.size());
  weights.reserve(sample.size());
  for (Eigen::Index i = 0; i < sample.size(); ++i) {
    if (!std::isnan(sample.values[i])) {
      values.push_back(sample.values[i]);
      weights.push_back(sample.weights[i]);
    }
  }
  if (values.empty()) {
    throw std::domain_error("drop_missing: all values are missing");
  }
  Eigen::ArrayXd v = Eigen::Map<Eigen::ArrayXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  Eigen::ArrayXd w = Eigen::Map<Eigen::ArrayXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
  if (!(w.sum() > 0.0)) {
    throw std::domain_error("drop_missing: remaining weights sum to zero");
  }
  return {std::move(v), std::move(w)};
}

Eigen::ArrayXd normalize_weights(const Eigen::ArrayXd& weights) {
  if ((weights < 0.0).any()) {
    throw std::domain_error("normalize_weights: weights must be non-negative");
  }
  const double sum = weights.sum();
  if (!(sum > 0.0)) {
    throw std::domain_error("normalize_weights: weight sum must be positive");
  }
  return weights / sum;
}

SortedWeightedSample sort_and_cut(const WeightedSample& sample) {
  const Eigen::Index n = sample.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return sample.values[a] < sample.values[b];
  });

  SortedWeightedSample out;
  out.ordered_values.resize(n);
  out.ordered_weights.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.ordered_values[i] = sample.values[order[static_cast<std::size_t>(i)]];
    out.ordered_weights[i] = sample.weights[order[static_cast<std::size_t>(i)]];
  }
  out.normalized_weights = normalize_weights(out.ordered_weights);
  out.cut_points.resize(n + 1);
  out.cut_points[0] = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    // the min() keeps rounding from pushing an interior prefix sum past 1
    out.cut_points[i + 1] = std::min(1.0, out.cut_points[i] + out.normalized_weights[i]);
  }
  // Absorb prefix-sum drift at the last positive-weight element. Pinning from
  // there keeps trailing zero-weight elements at exact zero-width gaps; the
  // drift sliver would otherwise hand them real mass when the estimator's
  // density is singular at 1.
  Eigen::Index last = n - 1;
  while (last > 0 && out.normalized_weights[last] == 0.0) --last;
  for (Eigen::Index i = last + 1; i <= n; ++i) out.cut_points[i] = 1.0;
  return out;
}

}  // namespace wqe
