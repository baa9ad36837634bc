#include "wqe/ess.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wqe {

EssKind EssKind::huggins_roy(double beta) {
  if (!(beta >= 0.0)) {
    throw std::invalid_argument("EssKind: Huggins-Roy beta must be >= 0");
  }
  return {Variant::HugginsRoy, beta};
}

double kish_ess(const Eigen::ArrayXd& weights) {
  if (weights.size() == 0 || (weights < 0.0).any()) {
    throw std::domain_error("kish_ess: weights must be non-negative and non-empty");
  }
  const double sum = weights.sum();
  if (!(sum > 0.0)) {
    throw std::domain_error("kish_ess: weights must have a positive sum");
  }
  return sum * sum / weights.square().sum();
}

double huggins_roy_ess(const Eigen::ArrayXd& normalized_weights, double beta) {
  const Eigen::ArrayXd& w = normalized_weights;
  if (w.size() == 0 || (w < 0.0).any()) {
    throw std::domain_error("huggins_roy_ess: weights must be non-negative and non-empty");
  }
  if (std::fabs(w.sum() - 1.0) > 1e-12) {
    throw std::domain_error("huggins_roy_ess: weights must be normalized");
  }
  if (!(beta >= 0.0)) {
    throw std::domain_error("huggins_roy_ess: beta must be >= 0");
  }

  if (beta == 0.0) {
    return static_cast<double>((w > 0.0).count());
  }
  if (beta == 1.0) {
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      if (w[i] > 0.0) entropy -= w[i] * std::log(w[i]);  // 0 log 0 := 0
    }
    return std::exp(entropy);
  }
  if (std::isinf(beta)) {
    return 1.0 / w.maxCoeff();
  }
  return std::pow(w.pow(beta).sum(), 1.0 / (1.0 - beta));
}

double effective_sample_size(const Eigen::ArrayXd& weights, const EssKind& kind) {
  if (kind.variant == EssKind::Variant::Kish) {
    return kish_ess(weights);
  }
  const double sum = weights.sum();
  if (!(sum > 0.0) || (weights < 0.0).any()) {
    throw std::domain_error("effective_sample_size: invalid weights");
  }
  return huggins_roy_ess(weights / sum, kind.beta);
}

}  // namespace wqe
