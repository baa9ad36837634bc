#pragma once

#include <stdexcept>

namespace wqe {

/// Shape parameters of a beta distribution. Both must be strictly positive.
struct BetaShape {
  double alpha;
  double beta;

  BetaShape(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
      throw std::invalid_argument("BetaShape: alpha and beta must be positive");
    }
  }
};

/// A closed subinterval of [0, 1].
struct UnitInterval {
  double lo;
  double hi;

  UnitInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
      throw std::invalid_argument("UnitInterval: requires 0 <= lo <= hi <= 1");
    }
  }

  double width() const { return hi - lo; }
};

/// ln B(alpha, beta)
double log_beta(const BetaShape& shape);

/// Regularized incomplete beta function I_t(alpha, beta).
/// Continued-fraction evaluation with the symmetry switch at t > alpha/(alpha+beta).
double reg_inc_beta(double t, const BetaShape& shape);

/// Beta density at t. Returns +infinity at a boundary where the density diverges
/// (t=0 with alpha<1, t=1 with beta<1).
double beta_pdf(double t, const BetaShape& shape);

/// Highest density interval [L, R] with R-L = width.
/// Interior case: pdf(L) == pdf(R), found by bisection (tolerance 1e-9).
/// Border cases follow the shape of the density:
///   alpha <= 1+eps, beta  > 1      -> [0, width]
///   alpha  > 1,     beta <= 1+eps  -> [1-width, 1]
///   width >= 1-eps                 -> [0, 1]
///   alpha <= 1+eps, beta <= 1+eps  -> [0, 1]  (degenerate; no trimming)
UnitInterval beta_hdi(const BetaShape& shape, double width);

}  // namespace wqe
