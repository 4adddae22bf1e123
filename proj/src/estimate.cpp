#include "catgeo/estimate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "catgeo/errors.hpp"
#include "catgeo/kcurve.hpp"
#include "catgeo/stats.hpp"
#include "catgeo/trig.hpp"

namespace catgeo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct PairSample {
  std::size_t i, j;
  double r, s, k;
};

struct Candidate {
  double x1, x2, m;
};

struct Record {
  std::size_t A, B, C;
  double t;
  double a, b, c;
  std::vector<Candidate> cands;
  bool fallback;
};

}  // namespace

EstimateReport extrinsic_curvature_estimate(const SampledSpace& space, const ExtrinsicOptions& opts) {
  const double K = std::isnan(opts.ambient_K) ? space.ambient_curvature() : opts.ambient_K;
  if (std::isnan(K)) throw DomainError("ambient curvature unknown for a matrix space");
  const double r_lo = opts.r_min > 0 ? opts.r_min : 8.0 * space.mesh();
  const double r_hi = opts.r_max > 0 ? opts.r_max : 0.5 * space.ambient_diameter();
  if (!(r_hi > r_lo)) throw DomainError("empty chord range for the extrinsic estimate");
  if (opts.shells < 1) throw DomainError("need at least one shell");

  const std::size_t n = space.size();
  std::vector<std::vector<PairSample>> rows(n);
  for_each_index(n, opts.execution, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = space.ambient(i, j);
      if (r < r_lo || r > r_hi) continue;
      const double s = space.intrinsic(i, j);
      if (K > 0 && s + r >= 2 * kPi / std::sqrt(K)) continue;
      double k = 0.0;
      if (s > r) {
        try {
          k = solve_k_prime(K, s, r);
        } catch (const DomainError&) {
          continue;  // arc too long for any circle with this chord
        }
      }
      rows[i].push_back({i, j, r, s, k});
    }
  });
  std::vector<PairSample> pairs;
  for (auto& row : rows) pairs.insert(pairs.end(), row.begin(), row.end());
  if (pairs.size() < opts.min_pairs) throw DomainError("too few admissible pairs for the extrinsic estimate");

  const int m = opts.shells;
  const double width = (r_hi - r_lo) / m;
  std::vector<std::vector<double>> shell_k(m), shell_ratio(m);
  std::vector<double> ratios;
  ratios.reserve(pairs.size());
  for (const PairSample& p : pairs) {
    const int b = std::min(m - 1, static_cast<int>((p.r - r_lo) / width));
    const double ratio = (p.s - p.r) / (p.r * p.r * p.r);
    shell_k[b].push_back(p.k);
    shell_ratio[b].push_back(ratio);
    ratios.push_back(ratio);
  }

  EstimateReport rep;
  rep.quantity = "extrinsic_curvature";
  rep.n = n;
  rep.samples_used = pairs.size();
  double wsum = 0.0, acc = 0.0;
  std::vector<double> fit_x, fit_y;
  for (int b = 0; b < m; ++b) {
    if (shell_k[b].size() < 10) continue;
    const double rm = r_lo + (b + 0.5) * width;
    const double q = quantile(shell_k[b], opts.quantile);
    const double w = rm * rm * rm * rm;
    wsum += w;
    acc += w * q;
    fit_x.push_back(rm * rm);
    fit_y.push_back(*std::max_element(shell_ratio[b].begin(), shell_ratio[b].end()));
    rep.add_extra("shell_" + std::to_string(b) + "_r", rm);
    rep.add_extra("shell_" + std::to_string(b) + "_k", q);
  }
  if (wsum == 0.0) throw DomainError("too few admissible pairs per shell");
  rep.value = acc / wsum;
  rep.pass = true;
  rep.tolerance = 0.0;

  const double q_raw = quantile(ratios, opts.quantile);
  const auto [slope, intercept] = fit_x.size() >= 2 ? linear_fit(fit_x, fit_y) : std::pair{0.0, fit_y[0]};
  (void)slope;
  rep.add_extra("ambient_K", K);
  rep.add_extra("r_min", r_lo);
  rep.add_extra("r_max", r_hi);
  rep.add_extra("mesh", space.mesh());
  rep.add_extra("eps", space.eps());
  rep.add_extra("raw_quantile", q_raw);
  rep.add_extra("A_raw_quantile", std::sqrt(24.0 * std::max(0.0, q_raw)));
  rep.add_extra("A_shell_extrapolated", std::sqrt(24.0 * std::max(0.0, intercept)));

  std::vector<double> ks(pairs.size());
  for (std::size_t t = 0; t < pairs.size(); ++t) ks[t] = pairs[t].k;
  rep.set_diagnostics_top(
      ks, true, [&](std::size_t t) { return std::vector<double>{pairs[t].r, pairs[t].s}; },
      [&](std::size_t t) { return std::vector<std::size_t>{pairs[t].i, pairs[t].j}; });
  return rep;
}

double triangle_defect(double K, double a, double b, double c, double x1, double x2, double m) {
  return four_point_distance(K, a, b, c, x1, x2) - m;
}

EstimateReport cat_upper_bound_estimate(const SampledSpace& space, const CatOptions& opts) {
  const std::size_t n = space.size();
  if (n < 3) throw DomainError("need at least three points for triangles");
  const double tol = opts.c_mesh * space.eps();
  const double lens = opts.lens_width * space.mesh();
  const double D = space.intrinsic_diameter();
  const double K_lo = -opts.bracket / (D * D);
  const double K_hi = opts.bracket / (D * D);

  // Triangle sampling is serial so that the sample depends only on the seed.
  std::mt19937_64 rng(opts.seed);
  std::vector<std::array<std::size_t, 3>> tris;
  const std::size_t max_attempts = 1000 * std::max<std::size_t>(opts.triangles, 1);
  for (std::size_t att = 0; att < max_attempts && tris.size() < opts.triangles; ++att) {
    const std::size_t i = rng() % n, j = rng() % n, k = rng() % n;
    if (i == j || j == k || k == i) continue;
    const double a = space.intrinsic(j, k), b = space.intrinsic(k, i), c = space.intrinsic(i, j);
    const double P = a + b + c;
    if (P > opts.max_perimeter || std::min({a, b, c}) < 0.1 * P) continue;
    tris.push_back({i, j, k});
  }
  if (tris.empty()) throw DomainError("no admissible triangles");

  constexpr double kT[3] = {0.25, 0.5, 0.75};
  std::vector<Record> recs(9 * tris.size());
  for_each_index(tris.size(), opts.execution, [&](std::size_t ti) {
    const auto& tr = tris[ti];
    for (int rot = 0; rot < 3; ++rot) {
      const std::size_t A = tr[rot], B = tr[(rot + 1) % 3], C = tr[(rot + 2) % 3];
      const double a = space.intrinsic(B, C);
      const auto rowB = space.intrinsic_row(B);
      const auto rowC = space.intrinsic_row(C);
      for (int q = 0; q < 3; ++q) {
        const double t = kT[q];
        Record& r = recs[9 * ti + 3 * rot + q];
        r = {A, B, C, t, a, space.intrinsic(C, A), space.intrinsic(A, B), {}, false};
        for (std::size_t x = 0; x < n; ++x)
          if (std::abs(rowB[x] - t * a) <= lens && std::abs(rowC[x] - (1 - t) * a) <= lens)
            r.cands.push_back({rowB[x], rowC[x], space.intrinsic(A, x)});
        if (r.cands.empty()) {
          const auto path = space.discrete_geodesic(B, C);
          const std::size_t x = space.path_point(path, t);
          r.cands.push_back({rowB[x], rowC[x], space.intrinsic(A, x)});
          r.fallback = true;
        }
      }
    }
  });

  std::vector<double> defects(recs.size());
  auto evaluate = [&](double K) {
    for_each_index(recs.size(), opts.execution, [&](std::size_t ri) {
      const Record& r = recs[ri];
      if (K > 0 && r.a + r.b + r.c >= 2 * kPi / std::sqrt(K)) {
        defects[ri] = kInf;
        return;
      }
      std::vector<double> d(r.cands.size());
      for (std::size_t c = 0; c < d.size(); ++c)
        d[c] = triangle_defect(K, r.a, r.b, r.c, r.cands[c].x1, r.cands[c].x2, r.cands[c].m);
      defects[ri] = median(std::move(d));
    });
    return *std::min_element(defects.begin(), defects.end());
  };

  EstimateReport rep;
  rep.quantity = "cat_upper_bound";
  rep.seed = opts.seed;
  rep.n = n;
  rep.tolerance = tol;
  double K_star;
  if (evaluate(K_lo) >= -tol) {
    K_star = K_lo;
  } else {
    if (evaluate(K_hi) < -tol) throw ConvergenceError("curvature bracket exhausted: no K in range passes");
    double lo = K_lo, hi = K_hi;
    for (int it = 0; it < opts.bisection_steps; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (evaluate(mid) >= -tol)
        hi = mid;
      else
        lo = mid;
    }
    K_star = hi;
  }
  const double min_def = evaluate(K_star);
  std::size_t used = 0, fallbacks = 0;
  for (std::size_t ri = 0; ri < recs.size(); ++ri) {
    used += std::isfinite(defects[ri]) ? 1 : 0;
    fallbacks += recs[ri].fallback ? 1 : 0;
  }
  rep.value = K_star;
  rep.pass = true;
  rep.samples_used = used;
  rep.add_extra("K_lo", K_lo);
  rep.add_extra("K_hi", K_hi);
  rep.add_extra("triangles", static_cast<double>(tris.size()));
  rep.add_extra("records", static_cast<double>(recs.size()));
  rep.add_extra("lens_fallbacks", static_cast<double>(fallbacks));
  rep.add_extra("min_defect", min_def);
  rep.add_extra("eps", space.eps());
  rep.add_extra("mesh", space.mesh());
  rep.set_diagnostics_top(
      defects, false,
      [&](std::size_t ri) {
        const Record& r = recs[ri];
        return std::vector<double>{r.t, r.a, r.b, r.c, static_cast<double>(r.cands.size())};
      },
      [&](std::size_t ri) { return std::vector<std::size_t>{recs[ri].A, recs[ri].B, recs[ri].C}; });
  return rep;
}

EstimateReport gauss_verify(const Scenario& scenario, const GaussOptions& opts) {
  const double K = scenario.truth.ambient_K;
  ExtrinsicOptions ex = opts.extrinsic;
  ex.ambient_K = K;
  const EstimateReport a_rep = extrinsic_curvature_estimate(scenario.space, ex);
  CatOptions co = opts.cat;
  if (std::isinf(co.max_perimeter) && std::isfinite(scenario.truth.injectivity))
    co.max_perimeter = 1.8 * scenario.truth.injectivity;
  const EstimateReport k_rep = cat_upper_bound_estimate(scenario.space, co);

  const double A = a_rep.value;
  const double bound = K + A * A;
  const double tol = std::max(opts.tol_rel * std::abs(bound), opts.tol_floor);
  EstimateReport rep;
  rep.quantity = "gauss";
  rep.seed = co.seed;
  rep.n = scenario.space.size();
  rep.value = k_rep.value;
  rep.tolerance = tol;
  rep.pass = k_rep.value <= bound + tol;
  rep.samples_used = k_rep.samples_used;
  rep.add_extra("ambient_K", K);
  rep.add_extra("A_est", A);
  rep.add_extra("K_star", k_rep.value);
  rep.add_extra("bound", bound);
  rep.add_extra("gap", bound - k_rep.value);
  rep.add_extra("A_raw_quantile", a_rep.extra("A_raw_quantile"));
  rep.add_extra("A_shell_extrapolated", a_rep.extra("A_shell_extrapolated"));
  rep.add_extra("extrinsic_pairs", static_cast<double>(a_rep.samples_used));
  rep.add_extra("tol_geom", k_rep.tolerance);
  rep.add_extra("min_defect", k_rep.extra("min_defect"));
  rep.add_extra("max_perimeter", co.max_perimeter);
  rep.add_extra("eps", scenario.space.eps());
  rep.add_extra("mesh", scenario.space.mesh());
  rep.diagnostics = k_rep.diagnostics;
  return rep;
}

double injectivity_lower_bound(double K, double A) {
  if (!(A >= 0)) throw DomainError("extrinsic curvature bound must be nonnegative");
  const double k2 = K + A * A;
  if (k2 <= 0) return kInf;
  return std::min(kPi / std::sqrt(k2), 0.5 * circumference(A, K));
}

EstimateReport closed_geodesic_check(const SampledSpace& space, std::span<const std::size_t> loop, double A,
                                     double K, const LoopOptions& opts) {
  const std::size_t m = loop.size();
  if (m < 3) throw DomainError("a closed loop needs at least three vertices");
  const double gtol = opts.geodesic_tol > 0 ? opts.geodesic_tol : 1e-3 * space.eps();
  const double ltol = opts.length_tol > 0 ? opts.length_tol : space.eps();
  std::vector<double> edge(m);
  for (std::size_t i = 0; i < m; ++i) edge[i] = space.ambient(loop[i], loop[(i + 1) % m]);
  double length = 0.0;
  for (double e : edge) length += e;

  const std::size_t hops = std::min<std::size_t>(static_cast<std::size_t>(std::max(opts.hops, 1)), m / 2);
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double chain = 0.0;
    for (std::size_t h = 1; h <= hops; ++h) {
      chain += edge[(i + h - 1) % m];
      const double excess = chain - space.intrinsic(loop[i], loop[(i + h) % m]);
      worst = std::max(worst, excess);
      if (excess > gtol) throw DomainError("loop fails the local-geodesic test");
    }
  }
  const double c = closed_curve_length_bound(K, A);
  EstimateReport rep;
  rep.quantity = "closed_geodesic";
  rep.n = space.size();
  rep.samples_used = m;
  rep.value = length / c;
  rep.tolerance = ltol / c;
  rep.pass = length >= c - ltol;
  rep.add_extra("loop_length", length);
  rep.add_extra("bound_length", c);
  rep.add_extra("A", A);
  rep.add_extra("ambient_K", K);
  rep.add_extra("max_chain_excess", worst);
  return rep;
}

EstimateReport tube_curvature_verify(double rho, double L, std::size_t n, std::uint64_t seed,
                                     const ExtrinsicOptions& opts, double tol_rel) {
  ScenarioSpec spec;
  spec.name = "tube_S2";
  spec.set("rho", rho);
  spec.set("L", L);
  spec.n = n;
  spec.seed = seed;
  const Scenario sc = generate(spec, opts.execution);
  EstimateReport a = extrinsic_curvature_estimate(sc.space, opts);
  const double bound = std::tan(rho);
  EstimateReport rep;
  rep.quantity = "tube_curvature";
  rep.seed = seed;
  rep.n = n;
  rep.value = a.value;
  rep.tolerance = tol_rel * bound;
  rep.pass = a.value <= bound + rep.tolerance;
  rep.samples_used = a.samples_used;
  rep.add_extra("tan_rho", bound);
  rep.add_extra("ratio", a.value / bound);
  for (const auto& [k, v] : a.extras) rep.add_extra(k, v);
  rep.diagnostics = a.diagnostics;
  return rep;
}

EstimateReport projection_length_bound_check(double K, double k, double rho_band,
                                             std::span<const ModelPoint> curve, double margin) {
  if (curve.size() < 2) throw DomainError("curve needs at least two points");
  const KCurve N(K, k);
  const std::size_t m = curve.size();
  std::vector<double> d(m), sig(m);
  for (std::size_t i = 0; i < m; ++i) {
    d[i] = N.signed_distance(curve[i]);
    sig[i] = N.projection_parameter(curve[i]);
    if (std::abs(d[i]) > rho_band) throw DomainError("curve exits the band around the k-curve");
    if (!(cs_k(K, d[i]) - k * sn_k(K, d[i]) > 0)) throw DomainError("curve exits the focal region");
  }
  const double c2 = k * k + 0.5 * K + margin;
  double r = 0.0, proj = 0.0, bound_extra = 0.0, ratio_int = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double du = distance(curve[i], curve[i + 1]);
    r += du;
    proj += distance(N.point_at(sig[i]), N.point_at(sig[i + 1]));
    auto g = [&](double x) { return k * std::abs(x) + c2 * x * x; };
    // Signed form covers both sides: sn is odd and cs is even.
    auto ratio = [&](double x) { return 1.0 / (cs_k(K, x) - k * sn_k(K, x)); };
    bound_extra += 0.5 * du * (g(d[i]) + g(d[i + 1]));
    ratio_int += 0.5 * du * (ratio(d[i]) + ratio(d[i + 1]));
  }
  const double bound = r + bound_extra;
  EstimateReport rep;
  rep.quantity = "projection_length";
  rep.samples_used = m;
  rep.value = proj;
  rep.tolerance = 1e-12 * std::max(1.0, r);
  rep.pass = proj <= bound + rep.tolerance;
  rep.add_extra("curve_length", r);
  rep.add_extra("bound", bound);
  rep.add_extra("ratio_integral", ratio_int);
  rep.add_extra("max_distance", *std::max_element(d.begin(), d.end()));
  rep.add_extra("min_distance", *std::min_element(d.begin(), d.end()));
  return rep;
}

}  // namespace catgeo
