#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace wqe {

/// Seedable, cross-platform random source: mt19937_64 (bit-exact per the
/// standard) with explicit sampling transforms, so simulation outputs are
/// reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Derives an independent stream for (seed, stream index) via splitmix64,
  /// so parallel and serial runs emit identical data.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1)));
  }

  /// Uniform on (0, 1).
  double uniform01() {
    double u;
    do {
      u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    } while (u <= 0.0);
    return u;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Marsaglia polar method.
  double normal(double mean, double sd) {
    if (has_spare_) {
      has_spare_ = false;
      return mean + sd * spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return mean + sd * (u * m);
  }

  /// Inverse CDF.
  double cauchy(double location, double scale) {
    return location + scale * std::tan(M_PI * (uniform01() - 0.5));
  }

  /// Inverse CDF, optionally shifted.
  double exponential(double rate, double shift = 0.0) {
    return shift - std::log(uniform01()) / rate;
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace wqe
