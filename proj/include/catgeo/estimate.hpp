#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "catgeo/model_space.hpp"
#include "catgeo/parallel.hpp"
#include "catgeo/report.hpp"
#include "catgeo/sampled.hpp"
#include "catgeo/scenarios.hpp"

namespace catgeo {

struct ExtrinsicOptions {
  double r_min = 0.0;  // 0: 8 x mesh
  double r_max = 0.0;  // 0: half the ambient diameter
  int shells = 10;
  double quantile = 0.99;
  std::size_t min_pairs = 100;
  // Curvature of the ambient model plane; NaN takes it from the space.
  double ambient_K = std::numeric_limits<double>::quiet_NaN();
  Execution execution = Execution::parallel;
};

// Extrinsic curvature A from arc-chord pairs (s = intrinsic, r = ambient).
// Each pair with r in [r_min, r_max] is converted to the curvature k' of
// the model arc with the same arclength and chord in the ambient model
// plane. The value is the r^4-weighted mean of per-shell quantiles of k'.
// The plain quantile of (s - r) / r^3 and its linear extrapolation in r^2
// over shell maxima are reported as extras.
EstimateReport extrinsic_curvature_estimate(const SampledSpace& space, const ExtrinsicOptions& opts = {});

struct CatOptions {
  std::size_t triangles = 1000;
  std::uint64_t seed = 0;
  double max_perimeter = std::numeric_limits<double>::infinity();
  double c_mesh = 0.25;      // tol_geom = c_mesh * eps
  double lens_width = 1.0;   // candidate band half-width, in units of mesh
  double bracket = 10.0;     // K searched in [-bracket, bracket] / D^2
  int bisection_steps = 40;
  Execution execution = Execution::parallel;
};

// Smallest K in the bracket for which every sampled triangle passes the
// comparison test at t in {0.25, 0.5, 0.75} on each side. The measured
// distance from the opposite vertex to points near the side is compared
// with the model distance of the four-point configuration in S_K; the
// defect of one (triangle, side, t) is the median over the candidate
// points. Throws ConvergenceError when the bracket is exhausted.
EstimateReport cat_upper_bound_estimate(const SampledSpace& space, const CatOptions& opts = {});

// Comparison defect, at curvature K, of the configuration with sides
// a = |BC|, b = |CA|, c = |AB|, a point X with |BX| = x1, |XC| = x2 and
// measured |AX| = m.
double triangle_defect(double K, double a, double b, double c, double x1, double x2, double m);

struct GaussOptions {
  ExtrinsicOptions extrinsic;
  CatOptions cat;  // max_perimeter defaults to 1.8 x the scenario's injectivity radius
  double tol_rel = 0.2;
  double tol_floor = 0.1;
};

// Extrinsic estimate A, intrinsic bound K*, and the check K* <= K + A^2 + tol.
EstimateReport gauss_verify(const Scenario& scenario, const GaussOptions& opts = {});

// min{pi / sqrt(K + A^2), c(A, K) / 2}; +inf when K + A^2 <= 0.
double injectivity_lower_bound(double K, double A);

struct LoopOptions {
  int hops = 8;
  double geodesic_tol = 0.0;  // 0: 1e-3 x eps
  double length_tol = 0.0;    // 0: eps
};

// Closed discrete loop (last vertex joins the first). Requires every
// subchain of at most `hops` edges to be shortest within geodesic_tol and
// compares the loop length with c(A, K).
EstimateReport closed_geodesic_check(const SampledSpace& space, std::span<const std::size_t> loop, double A,
                                     double K, const LoopOptions& opts = {});

// A fan at p: the base geodesic from p to q and geodesics gamma_i from p
// to targets spread along the geodesic from q to a third vertex. Each
// gamma_i carries its own grid step h[i] = min(|pq|, |p target_i|) / grid.
struct FanSample {
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<std::size_t> targets;
  std::vector<double> h;
  double eps = 0.0;                    // graph scale of the source space
  std::vector<std::vector<double>> f;  // f[i][j] = |sigma(j h_i) gamma_i(j h_i)|, j = 0..grid
};

struct FanOptions {
  std::size_t fans = 200;
  std::uint64_t seed = 0;
  std::size_t geodesics = 6;
  std::size_t grid = 6;
  double lens_width = 1.0;  // in units of mesh
  // Leg and base lengths as fractions of the intrinsic diameter.
  double leg_min = 0.25, leg_max = 0.5;
  double base_min = 0.1, base_max = 0.3;
  Execution execution = Execution::parallel;
};

// Fans from random vertices. Points at arclength t on the geodesic from p
// to x are located by the lens {y : |py| ~ t, |py| + |yx| ~ |px|}, and the
// separations are medians over lens pairs.
std::vector<FanSample> build_fans(const SampledSpace& space, const FanOptions& opts = {});

// Second-difference defect D = f(t-h) + f(t+h) - 2 f(t) + (K + A^2 + slack) f(t) h^2
// over all interior grid points; passes when D >= -tol_mesh everywhere
// (default 4 eps h, per geodesic).
EstimateReport fan_convexity_check(const FanSample& fan, double K, double A, double slack = 0.0,
                                   double tol_mesh = std::numeric_limits<double>::quiet_NaN());

// Runs fan_convexity_check over many fans; value is the minimum defect.
EstimateReport fan_convexity_survey(const SampledSpace& space, double K, double A, const FanOptions& opts = {});

// Builds tube_S2(rho, L), estimates A in the ambient S^2 and checks
// A <= tan(rho) (1 + tol_rel).
EstimateReport tube_curvature_verify(double rho, double L, std::size_t n, std::uint64_t seed,
                                     const ExtrinsicOptions& opts = {}, double tol_rel = 0.1);

// Projection onto the k-curve N of S_K realized by KCurve::point_at, for a
// polyline within rho_band of N on either side. The projected curve is the
// polyline through the exact projections of the vertices, so a curve lying
// on N projects to itself; its length is compared with
// r + integral of k |d| + (k^2 + K/2 + margin) d^2 (trapezoid rule).
EstimateReport projection_length_bound_check(double K, double k, double rho_band,
                                             std::span<const ModelPoint> curve, double margin = 0.1);

}  // namespace catgeo
