#include "wqe/mixture.hpp"

#include <stdexcept>

namespace wqe {

WeightedSample build_mixture_sample(const MixtureSpec& spec) {
  if (spec.components.empty()) {
    throw std::domain_error("build_mixture_sample: at least one component is required");
  }
  Eigen::Index total = 0;
  for (const auto& c : spec.components) {
    if (c.sample.size() == 0) {
      throw std::domain_error("build_mixture_sample: empty component sample");
    }
    if (!(c.weight > 0.0)) {
      throw std::domain_error("build_mixture_sample: component weights must be positive");
    }
    total += c.sample.size();
  }

  Eigen::ArrayXd values(total);
  Eigen::ArrayXd weights(total);
  Eigen::Index offset = 0;
  for (const auto& c : spec.components) {
    const Eigen::Index m = c.sample.size();
    values.segment(offset, m) = c.sample;
    weights.segment(offset, m).setConstant(c.weight / static_cast<double>(m));
    offset += m;
  }
  return {std::move(values), std::move(weights)};
}

std::vector<std::pair<double, double>> mixture_quantile_curve(
    const MixtureSpec& spec, const EstimatorKind& kind, const std::vector<double>& p_grid,
    const EssKind& ess) {
  const WeightedSample sample = build_mixture_sample(spec);
  const std::vector<double> q = estimate(sample, kind, p_grid, ess);
  std::vector<std::pair<double, double>> curve;
  curve.reserve(p_grid.size());
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    curve.emplace_back(p_grid[i], q[i]);
  }
  return curve;
}

}  // namespace wqe
