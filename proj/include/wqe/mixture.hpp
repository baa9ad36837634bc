#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "wqe/estimators.hpp"

namespace wqe {

/// Mixture components: a sample from each individual distribution plus its
/// mixture weight.
struct MixtureSpec {
  struct Component {
    Eigen::ArrayXd sample;
    double weight;
  };

  std::vector<Component> components;
};

/// Concatenates the components into one weighted sample. Each element of
/// component j gets weight weight_j / size_j, so a component's total mass
/// equals its mixture weight regardless of its sample size.
WeightedSample build_mixture_sample(const MixtureSpec& spec);

/// Quantile curve q(p) of the mixture over the given probability grid.
std::vector<std::pair<double, double>> mixture_quantile_curve(
    const MixtureSpec& spec, const EstimatorKind& kind, const std::vector<double>& p_grid,
    const EssKind& ess = EssKind::kish());

}  // namespace wqe
