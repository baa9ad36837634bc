#pragma once

#include <deque>
#include <limits>

#include <Eigen/Dense>

#include "wqe/estimators.hpp"

namespace wqe {

/// Exponential-decay parameters: half-life in sample-index (or group) units
/// and the normalized-weight floor below which old elements are evicted.
/// weight_floor = 0 disables eviction.
struct DecaySpec {
  double half_life;
  double weight_floor = 1e-6;

  DecaySpec(double half_life_, double weight_floor_ = 1e-6);
};

/// w_i = 2^{-(n-i)/half_life} for i = 1..n; the newest element gets weight 1.
Eigen::ArrayXd decay_weights(Eigen::Index n, double half_life);

/// Per-group decay: all elements of group g share weight 2^{-(g_max-g)/half_life}.
/// Group ids must be nondecreasing.
Eigen::ArrayXd assign_group_weights(const std::vector<long long>& group_ids, double half_life);

/// Incremental moving-quantile estimator over a measurement stream.
/// Old elements are evicted by a precomputed age cutoff derived from
/// weight_floor; weights are recomputed from ages at query time, so long
/// streams accumulate no decay drift.
class MovingQuantileTracker {
 public:
  MovingQuantileTracker(DecaySpec spec, EstimatorKind kind = EstimatorKind::hf(7),
                        EssKind ess = EssKind::kish());

  void push(double value);
  double quantile(double p) const;
  std::size_t size() const { return values_.size(); }
  std::size_t capacity() const { return max_count_; }

 private:
  DecaySpec spec_;
  EstimatorKind kind_;
  EssKind ess_;
  std::size_t max_count_;
  std::deque<double> values_;  // front = oldest
};

}  // namespace wqe
