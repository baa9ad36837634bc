#include "wqe/smoothing.hpp"

#include <cmath>
#include <stdexcept>

namespace wqe {

DecaySpec::DecaySpec(double half_life_, double weight_floor_)
    : half_life(half_life_), weight_floor(weight_floor_) {
  if (!(half_life > 0.0)) {
    throw std::domain_error("DecaySpec: half_life must be positive");
  }
  if (!(weight_floor >= 0.0 && weight_floor < 1.0)) {
    throw std::domain_error("DecaySpec: weight_floor must lie in [0, 1)");
  }
}

Eigen::ArrayXd decay_weights(Eigen::Index n, double half_life) {
  if (!(half_life > 0.0)) {
    throw std::domain_error("decay_weights: half_life must be positive");
  }
  if (n < 1) {
    throw std::domain_error("decay_weights: n must be >= 1");
  }
  Eigen::ArrayXd w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    w[i] = std::exp2(-static_cast<double>(n - 1 - i) / half_life);
  }
  return w;
}

Eigen::ArrayXd assign_group_weights(const std::vector<long long>& group_ids, double half_life) {
  if (!(half_life > 0.0)) {
    throw std::domain_error("assign_group_weights: half_life must be positive");
  }
  if (group_ids.empty()) {
    throw std::domain_error("assign_group_weights: empty input");
  }
  for (std::size_t i = 1; i < group_ids.size(); ++i) {
    if (group_ids[i] < group_ids[i - 1]) {
      throw std::domain_error("assign_group_weights: group ids must be nondecreasing");
    }
  }
  const long long g_max = group_ids.back();
  Eigen::ArrayXd w(static_cast<Eigen::Index>(group_ids.size()));
  for (std::size_t i = 0; i < group_ids.size(); ++i) {
    w[static_cast<Eigen::Index>(i)] =
        std::exp2(-static_cast<double>(g_max - group_ids[i]) / half_life);
  }
  return w;
}

MovingQuantileTracker::MovingQuantileTracker(DecaySpec spec, EstimatorKind kind, EssKind ess)
    : spec_(spec), kind_(kind), ess_(ess) {
  if (spec_.weight_floor > 0.0) {
    // Age cutoff: raw weight 2^{-age/t_half} drops below the floor after
    // t_half * log2(1/floor) steps.
    const double cutoff = spec_.half_life * std::log2(1.0 / spec_.weight_floor);
    max_count_ = static_cast<std::size_t>(std::ceil(cutoff)) + 1;
  } else {
    max_count_ = std::numeric_limits<std::size_t>::max();
  }
}

void MovingQuantileTracker::push(double value) {
  if (std::isnan(value)) {
    throw std::invalid_argument("MovingQuantileTracker: missing values are not accepted");
  }
  values_.push_back(value);
  while (values_.size() > max_count_) {
    values_.pop_front();
  }
}

double MovingQuantileTracker::quantile(double p) const {
  if (values_.empty()) {
    throw std::domain_error("MovingQuantileTracker: empty tracker");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(values_.size());
  Eigen::ArrayXd values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    values[i] = values_[static_cast<std::size_t>(i)];
  }
  const WeightedSample sample{values, decay_weights(n, spec_.half_life)};
  return estimate(sample, kind_, {p}, ess_).front();
}

}  // namespace wqe
