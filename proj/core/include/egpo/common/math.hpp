#pragma once

#include <algorithm>
#include <cmath>

namespace egpo {

constexpr double kPi = 3.14159265358979323846;

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  return a - kPi;
}

inline double clamp(double x, double lo, double hi) {
  return std::min(std::max(x, lo), hi);
}

/// atanh with the argument pulled strictly inside (-1, 1).
inline double atanh_safe(double x, double eps = 1e-9) {
  return std::atanh(clamp(x, -1.0 + eps, 1.0 - eps));
}

inline double softplus(double x) {
  // log(1 + e^x), stable for large |x|.
  if (x > 30.0) return x;
  if (x < -30.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

inline double square(double x) { return x * x; }

/// Gaussian pdf N(x; mean, std).
inline double gaussian_pdf(double x, double mean, double std_dev) {
  const double z = (x - mean) / std_dev;
  return std::exp(-0.5 * z * z) / (std_dev * std::sqrt(2.0 * kPi));
}

/// Gaussian cdf via erf.
inline double gaussian_cdf(double x, double mean, double std_dev) {
  return 0.5 * std::erfc(-(x - mean) / (std_dev * std::sqrt(2.0)));
}

}  // namespace egpo
