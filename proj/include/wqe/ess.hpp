#pragma once

#include <Eigen/Dense>

namespace wqe {

/// Selects the effective-sample-size formula applied to the weights.
/// Kish's n* = (sum w)^2 / sum w^2 equals HugginsRoy(2) mathematically;
/// the equality is covered by tests rather than collapsing the variants.
struct EssKind {
  enum class Variant { Kish, HugginsRoy };

  Variant variant = Variant::Kish;
  double beta = 2.0;  // used by HugginsRoy; may be +infinity

  static EssKind kish() { return {Variant::Kish, 2.0}; }
  static EssKind huggins_roy(double beta);
};

/// Kish's effective sample size (sum w)^2 / (sum w^2) over raw weights.
double kish_ess(const Eigen::ArrayXd& weights);

/// Huggins-Roy family ESS_beta over normalized weights (sum == 1 within 1e-12).
///   beta = 0        -> count of nonzero weights
///   beta = 1        -> exp(-sum w log w), with 0 log 0 := 0
///   beta = infinity -> 1 / max(w)
///   otherwise       -> (sum w^beta)^(1/(1-beta))
double huggins_roy_ess(const Eigen::ArrayXd& normalized_weights, double beta);

/// ESS of raw weights under the configured kind.
double effective_sample_size(const Eigen::ArrayXd& weights, const EssKind& kind);

}  // namespace wqe
