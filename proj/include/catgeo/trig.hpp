#pragma once

// Curvature-scaled trigonometric functions. For curvature K these are the
// solutions of f'' + K f = 0 used throughout the model-plane formulas:
//   sn_K(x) = sin(sqrt(K) x) / sqrt(K)      (sinh for K < 0, x for K = 0)
//   cs_K(x) = cos(sqrt(K) x)                 (cosh for K < 0, 1 for K = 0)
//   md_K(x) = (1 - cs_K(x)) / K              (x^2 / 2 for K = 0)
// Each has a series branch for |K| x^2 below kSeriesThreshold so that
// K -> 0 is continuous.

namespace catgeo {

inline constexpr double kSeriesThreshold = 1e-8;

double sn_k(double K, double x);
double cs_k(double K, double x);
double md_k(double K, double x);
// tan_K(x) = sn_K(x) / cs_K(x).
double tan_k(double K, double x);

// Inverse of sn_K on [0, pi / (2 sqrt K)] for K > 0, on [0, inf) otherwise.
double arcsn_k(double K, double y);
// Inverse of tan_K; y may be +inf for K > 0.
double arctan_k(double K, double y);
// Inverse of md_K on [0, pi / sqrt K] for K > 0.
double inv_md_k(double K, double m);

// d/dK of md_K(x) at fixed x.
double md_k_dK(double K, double x);

}  // namespace catgeo
