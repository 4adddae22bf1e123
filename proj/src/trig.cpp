#include "catgeo/trig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace catgeo {

double sn_k(double K, double x) {
  const double z = K * x * x;
  if (std::abs(z) < kSeriesThreshold) return x * (1.0 - z / 6.0 + z * z / 120.0);
  if (K > 0) {
    const double q = std::sqrt(K);
    return std::sin(q * x) / q;
  }
  const double q = std::sqrt(-K);
  return std::sinh(q * x) / q;
}

double cs_k(double K, double x) {
  const double z = K * x * x;
  if (std::abs(z) < kSeriesThreshold) return 1.0 - z / 2.0 + z * z / 24.0;
  if (K > 0) return std::cos(std::sqrt(K) * x);
  return std::cosh(std::sqrt(-K) * x);
}

double md_k(double K, double x) {
  const double z = K * x * x;
  if (std::abs(z) < kSeriesThreshold) return 0.5 * x * x * (1.0 - z / 12.0 + z * z / 360.0);
  if (K > 0) {
    const double s = std::sin(0.5 * std::sqrt(K) * x);
    return 2.0 * s * s / K;
  }
  const double s = std::sinh(0.5 * std::sqrt(-K) * x);
  return -2.0 * s * s / K;
}

double tan_k(double K, double x) {
  const double z = K * x * x;
  if (std::abs(z) < kSeriesThreshold) return x * (1.0 + z / 3.0 + 2.0 * z * z / 15.0);
  if (K > 0) {
    const double q = std::sqrt(K);
    return std::tan(q * x) / q;
  }
  const double q = std::sqrt(-K);
  return std::tanh(q * x) / q;
}

double arcsn_k(double K, double y) {
  const double w = K * y * y;
  if (std::abs(w) < kSeriesThreshold) return y * (1.0 + w / 6.0 + 3.0 * w * w / 40.0);
  if (K > 0) {
    const double q = std::sqrt(K);
    return std::asin(std::min(1.0, q * y)) / q;
  }
  const double q = std::sqrt(-K);
  return std::asinh(q * y) / q;
}

double arctan_k(double K, double y) {
  if (std::isinf(y)) {
    if (K > 0) return 0.5 * std::numbers::pi / std::sqrt(K);
    return std::numeric_limits<double>::infinity();
  }
  const double w = K * y * y;
  if (std::abs(w) < kSeriesThreshold) return y * (1.0 - w / 3.0 + w * w / 5.0);
  if (K > 0) {
    const double q = std::sqrt(K);
    return std::atan(q * y) / q;
  }
  const double q = std::sqrt(-K);
  if (q * y >= 1.0) return std::numeric_limits<double>::infinity();
  return std::atanh(q * y) / q;
}

double inv_md_k(double K, double m) {
  const double w = K * m;
  if (std::abs(w) < kSeriesThreshold)
    return std::sqrt(2.0 * m) * (1.0 + w / 12.0 + 3.0 * w * w / 160.0);
  if (K > 0) {
    const double q = std::sqrt(K);
    return 2.0 * std::asin(std::min(1.0, std::sqrt(0.5 * w))) / q;
  }
  const double q = std::sqrt(-K);
  return 2.0 * std::asinh(std::sqrt(-0.5 * w)) / q;
}

double md_k_dK(double K, double x) {
  const double z = K * x * x;
  if (std::abs(z) < 0.5) {
    // md_K(x) = sum_{n>=0} (-K)^n x^(2n+2) / (2n+2)!, differentiated termwise.
    double u = -x * x * x * x / 24.0;
    double sum = u;
    for (int n = 1; n < 14; ++n) {
      u *= -z / ((2.0 * n + 3.0) * (2.0 * n + 4.0));
      sum += (n + 1) * u;
    }
    return sum;
  }
  return (0.5 * x * sn_k(K, x) - md_k(K, x)) / K;
}

}  // namespace catgeo
