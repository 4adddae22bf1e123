#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "catgeo/errors.hpp"
#include "catgeo/estimate.hpp"
#include "catgeo/stats.hpp"

namespace catgeo {

namespace {

std::vector<std::size_t> lens(const SampledSpace& space, std::size_t a, std::size_t b, double t, double w) {
  const auto ra = space.intrinsic_row(a);
  const auto rb = space.intrinsic_row(b);
  const double L = space.intrinsic(a, b);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < space.size(); ++x)
    if (ra[x] + rb[x] <= L + w && std::abs(ra[x] - t) <= w) out.push_back(x);
  return out;
}

// Fills f and h for one fan; drops geodesics whose lens comes up empty.
void measure(const SampledSpace& space, FanSample& fan, std::size_t grid, double w) {
  const double Ls = space.intrinsic(fan.p, fan.q);
  std::vector<std::size_t> kept;
  for (std::size_t x : fan.targets) {
    const double Lg = space.intrinsic(fan.p, x);
    const double h = std::min(Ls, Lg) / static_cast<double>(grid);
    std::vector<double> f{0.0};
    bool ok = true;
    for (std::size_t j = 1; j <= grid && ok; ++j) {
      const auto cs = lens(space, fan.p, fan.q, j * h, w);
      const auto cg = lens(space, fan.p, x, j * h, w);
      if (cs.empty() || cg.empty()) {
        ok = false;
        break;
      }
      std::vector<double> d;
      d.reserve(cs.size() * cg.size());
      for (std::size_t a : cs)
        for (std::size_t b : cg) d.push_back(space.intrinsic(a, b));
      f.push_back(median(std::move(d)));
    }
    if (!ok) continue;
    kept.push_back(x);
    fan.h.push_back(h);
    fan.f.push_back(std::move(f));
  }
  fan.targets = std::move(kept);
}

}  // namespace

std::vector<FanSample> build_fans(const SampledSpace& space, const FanOptions& opts) {
  const std::size_t n = space.size();
  if (n < 3) throw DomainError("need at least three points for fans");
  if (opts.grid < 2 || opts.geodesics < 1) throw DomainError("fan grid needs at least two steps");
  const double D = space.intrinsic_diameter();
  const double w = opts.lens_width * space.mesh();

  std::mt19937_64 rng(opts.seed);
  std::vector<FanSample> fans;
  const std::size_t max_attempts = 10000 * std::max<std::size_t>(opts.fans, 1);
  for (std::size_t att = 0; att < max_attempts && fans.size() < opts.fans; ++att) {
    const std::size_t p = rng() % n, q = rng() % n, r = rng() % n;
    if (p == q || q == r || r == p) continue;
    const double pq = space.intrinsic(p, q) / D, pr = space.intrinsic(p, r) / D, qr = space.intrinsic(q, r) / D;
    if (pq < opts.leg_min || pq > opts.leg_max || pr < opts.leg_min || pr > opts.leg_max) continue;
    if (qr < opts.base_min || qr > opts.base_max) continue;
    FanSample fan;
    fan.p = p;
    fan.q = q;
    fan.eps = space.eps();
    const auto base = space.discrete_geodesic(q, r);
    for (std::size_t i = 1; i <= opts.geodesics; ++i)
      fan.targets.push_back(space.path_point(base, static_cast<double>(i) / static_cast<double>(opts.geodesics)));
    fans.push_back(std::move(fan));
  }
  if (fans.empty()) throw DomainError("no admissible fans");

  for_each_index(fans.size(), opts.execution, [&](std::size_t i) { measure(space, fans[i], opts.grid, w); });
  std::erase_if(fans, [](const FanSample& f) { return f.targets.empty(); });
  if (fans.empty()) throw DomainError("every fan lost its geodesics to empty lenses");
  return fans;
}

EstimateReport fan_convexity_check(const FanSample& fan, double K, double A, double slack, double tol_mesh) {
  if (fan.f.empty()) throw DomainError("fan has no geodesics");
  const double c = K + A * A + slack;
  double min_d = std::numeric_limits<double>::infinity();
  double min_norm = min_d;
  std::size_t count = 0;
  std::vector<double> defects;
  std::vector<std::pair<std::size_t, std::size_t>> where;
  for (std::size_t i = 0; i < fan.f.size(); ++i) {
    const auto& f = fan.f[i];
    const double h = fan.h[i];
    const double tol = std::isnan(tol_mesh) ? 4.0 * fan.eps * h : tol_mesh;
    for (std::size_t j = 1; j + 1 < f.size(); ++j) {
      const double d = f[j - 1] + f[j + 1] - 2.0 * f[j] + c * f[j] * h * h;
      min_d = std::min(min_d, d);
      min_norm = std::min(min_norm, tol > 0 ? d / tol : (d >= 0 ? 0.0 : -std::numeric_limits<double>::infinity()));
      defects.push_back(d);
      where.emplace_back(i, j);
      ++count;
    }
  }
  EstimateReport rep;
  rep.quantity = "fan_convexity";
  rep.value = min_d;
  rep.tolerance = std::isnan(tol_mesh) ? 4.0 * fan.eps * *std::min_element(fan.h.begin(), fan.h.end()) : tol_mesh;
  rep.pass = min_norm >= -1.0;
  rep.samples_used = count;
  rep.add_extra("min_normalized", min_norm);
  rep.add_extra("bound", c);
  rep.set_diagnostics_top(
      defects, false,
      [&](std::size_t t) { return std::vector<double>{fan.h[where[t].first], static_cast<double>(where[t].second)}; },
      [&](std::size_t t) { return std::vector<std::size_t>{fan.p, fan.q, fan.targets[where[t].first]}; });
  return rep;
}

EstimateReport fan_convexity_survey(const SampledSpace& space, double K, double A, const FanOptions& opts) {
  const auto fans = build_fans(space, opts);
  EstimateReport rep;
  rep.quantity = "fan_convexity";
  rep.seed = opts.seed;
  rep.n = space.size();
  rep.value = std::numeric_limits<double>::infinity();
  rep.pass = true;
  double min_norm = rep.value;
  std::size_t failing = 0, geodesics = 0;
  std::vector<double> per_fan(fans.size());
  for (std::size_t i = 0; i < fans.size(); ++i) {
    const EstimateReport r = fan_convexity_check(fans[i], K, A);
    per_fan[i] = r.extra("min_normalized");
    rep.value = std::min(rep.value, r.value);
    min_norm = std::min(min_norm, per_fan[i]);
    rep.samples_used += r.samples_used;
    geodesics += fans[i].targets.size();
    if (!r.pass) {
      rep.pass = false;
      ++failing;
    }
  }
  rep.tolerance = 1.0;  // defects are compared in units of 4 eps h
  rep.add_extra("min_normalized", min_norm);
  rep.add_extra("fans", static_cast<double>(fans.size()));
  rep.add_extra("geodesics", static_cast<double>(geodesics));
  rep.add_extra("failing_fans", static_cast<double>(failing));
  rep.add_extra("eps", space.eps());
  rep.add_extra("mesh", space.mesh());
  rep.set_diagnostics_top(
      per_fan, false, [&](std::size_t i) { return std::vector<double>{fans[i].h.front()}; },
      [&](std::size_t i) { return std::vector<std::size_t>{fans[i].p, fans[i].q}; });
  return rep;
}

}  // namespace catgeo
