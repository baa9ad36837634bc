#include "wqe/special_functions.hpp"

#include <cmath>
#include <limits>

namespace wqe {
namespace {

constexpr double kHdiEps = 1e-9;
constexpr double kHdiTol = 1e-12;

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int max_iter = 500;
  constexpr double eps = 1e-16;
  constexpr double tiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace

double log_beta(const BetaShape& shape) {
  return std::lgamma(shape.alpha) + std::lgamma(shape.beta) -
         std::lgamma(shape.alpha + shape.beta);
}

double reg_inc_beta(double t, const BetaShape& shape) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("reg_inc_beta: t must lie in [0, 1]");
  }
  if (t == 0.0) return 0.0;
  if (t == 1.0) return 1.0;

  const double a = shape.alpha;
  const double b = shape.beta;
  const double front =
      std::exp(a * std::log(t) + b * std::log1p(-t) - log_beta(shape));
  if (t <= a / (a + b)) {
    return front * beta_continued_fraction(a, b, t) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - t) / b;
}

double beta_pdf(double t, const BetaShape& shape) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("beta_pdf: t must lie in [0, 1]");
  }
  const double a = shape.alpha;
  const double b = shape.beta;
  if (t == 0.0) {
    if (a < 1.0) return std::numeric_limits<double>::infinity();
    if (a > 1.0) return 0.0;
    return std::exp(-log_beta(shape));  // = b for shape (1, b)
  }
  if (t == 1.0) {
    if (b < 1.0) return std::numeric_limits<double>::infinity();
    if (b > 1.0) return 0.0;
    return std::exp(-log_beta(shape));
  }
  return std::exp((a - 1.0) * std::log(t) + (b - 1.0) * std::log1p(-t) -
                  log_beta(shape));
}

UnitInterval beta_hdi(const BetaShape& shape, double width) {
  if (!(width > 0.0)) {
    throw std::domain_error("beta_hdi: width must be positive");
  }
  const double a = shape.alpha;
  const double b = shape.beta;

  if (a <= 1.0 + kHdiEps && b <= 1.0 + kHdiEps) {
    // Degenerate shape: no interior mode to trim around.
    return {0.0, 1.0};
  }
  if (a <= 1.0 + kHdiEps && b > 1.0) {
    return {0.0, std::min(width, 1.0)};  // Left border case
  }
  if (a > 1.0 && b <= 1.0 + kHdiEps) {
    return {1.0 - std::min(width, 1.0), 1.0};  // Right border case
  }
  if (width >= 1.0 - kHdiEps) {
    return {0.0, 1.0};
  }

  // Interior case: pdf(l) == pdf(l + width) with l left of the mode.
  const double mode = (a - 1.0) / (a + b - 2.0);
  double lo = std::max(0.0, mode - width);
  double hi = std::min(mode, 1.0 - width);
  const auto diff = [&](double l) {
    return beta_pdf(l, shape) - beta_pdf(l + width, shape);
  };
  // diff is increasing on [lo, hi]: diff(lo) <= 0 <= diff(hi).
  while (hi - lo > kHdiTol) {
    const double mid = 0.5 * (lo + hi);
    if (diff(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double l = 0.5 * (lo + hi);
  return {l, l + width};
}

}  // namespace wqe
