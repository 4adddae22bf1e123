#include "catgeo/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <json.hpp>

#include "catgeo/errors.hpp"
#include "catgeo/model_space.hpp"

namespace catgeo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGolden = 0.6180339887498949;

// Uniform double in [0, 1) from the top 53 bits, independent of the
// standard library's distribution implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

double frac(double x) { return x - std::floor(x); }

std::array<double, 3> lat_lon(double lat, double lon) {
  return {std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)};
}

double max_nn_distance(const PointCloud& pts, const Ambient& amb, Execution ex) {
  const std::size_t n = pts.size();
  std::vector<double> nn(n, kInf);
  for_each_index(n, ex, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) nn[i] = std::min(nn[i], amb.distance(pts[i], pts[j]));
  });
  return *std::max_element(nn.begin(), nn.end());
}

struct Model {
  Ambient ambient;
  bool region = false;  // tube or band: edges are filtered by membership
  double rho = 0.0;
  double arc = 0.0;  // length of the core arc T
};

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

Model model_for(const ScenarioSpec& spec) {
  const std::string& nm = spec.name;
  Model m;
  if (nm == "circle_E2" || nm == "segment_E2" || nm == "sphere_E3" || nm == "cylinder_E3") {
    m.ambient = {Ambient::Kind::euclidean, 1.0};
  } else if (nm == "clifford_torus_S3") {
    m.ambient = {Ambient::Kind::sphere, 1.0};
  } else if (nm == "tube_S2" || nm == "band_S2") {
    m.ambient = {Ambient::Kind::sphere, 1.0};
    m.region = true;
    m.rho = spec.param("rho", kPi / 6);
    m.arc = nm == "band_S2" ? 2 * kPi : spec.param("L", 2.0);
  } else if (nm == "equidistant_H2") {
    m.ambient = {Ambient::Kind::hyperboloid, 1.0};
  } else {
    throw DomainError("unknown scenario: " + nm);
  }
  return m;
}

EdgeFilter region_filter(const PointCloud& pts, double rho, double arc, double tau) {
  return [&pts, rho, arc, tau](std::size_t i, std::size_t j) {
    const auto a = pts[i];
    const auto b = pts[j];
    double dot = 0.0;
    for (int c = 0; c < 3; ++c) dot += a[c] * b[c];
    const double theta = std::acos(std::clamp(dot, -1.0, 1.0));
    if (theta == 0.0) return true;
    const double st = std::sin(theta);
    for (int k = 1; k <= 5; ++k) {
      const double t = k / 6.0;
      const double wa = std::sin((1 - t) * theta) / st, wb = std::sin(t * theta) / st;
      const double x[3] = {wa * a[0] + wb * b[0], wa * a[1] + wb * b[1], wa * a[2] + wb * b[2]};
      const double nx = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
      const double u[3] = {x[0] / nx, x[1] / nx, x[2] / nx};
      if (distance_to_equator_arc(u, arc) > rho + tau) return false;
    }
    return true;
  };
}

MeshPolicy effective_policy(const ScenarioSpec& spec) {
  if (spec.mesh != MeshPolicy::scenario_default) return spec.mesh;
  const bool curve = spec.name == "circle_E2" || spec.name == "segment_E2" || spec.name == "equidistant_H2";
  return curve ? MeshPolicy::grid : MeshPolicy::quasi_random;
}

// Low-discrepancy pair in [0,1)^2 with a seeded rotation.
struct Lattice {
  MeshPolicy policy;
  std::size_t n;
  double d1, d2;
  std::mt19937_64* rng;
  std::pair<double, double> at(std::size_t i) const {
    switch (policy) {
      case MeshPolicy::random:
        return {unit(*rng), unit(*rng)};
      case MeshPolicy::grid:
      case MeshPolicy::quasi_random:
      case MeshPolicy::scenario_default:
        break;
    }
    return {(static_cast<double>(i) + 0.5) / static_cast<double>(n), frac(static_cast<double>(i) * kGolden + d2)};
  }
};

PointCloud sample_region(const ScenarioSpec& spec, double rho, double arc, std::mt19937_64& rng) {
  const std::size_t n = spec.n;
  const bool band = arc >= 2 * kPi;
  const std::size_t nb = n / 5;
  PointCloud pts;
  // Boundary enrichment: uniform grids on the two boundary arcs at +-rho.
  const double shift = band ? unit(rng) : 0.0;
  for (int side : {1, -1}) {
    for (std::size_t j = 0; j < nb; ++j) {
      const double lon = band ? 2 * kPi * (static_cast<double>(j) + shift) / static_cast<double>(nb)
                              : arc * static_cast<double>(j) / static_cast<double>(nb - 1);
      const auto p = lat_lon(side * rho, lon);
      pts.push_back({p[0], p[1], p[2]});
    }
  }
  // Interior by rejection from the area measure on lon x z.
  const double lo = band ? 0.0 : -rho;
  const double hi = band ? 2 * kPi : arc + rho;
  const double zmax = std::sin(rho);
  const MeshPolicy pol = effective_policy(spec);
  const double d1 = unit(rng), d2 = unit(rng);
  std::uint64_t k = 0;
  while (pts.size() < n) {
    ++k;
    double u, v;
    if (pol == MeshPolicy::random) {
      u = unit(rng);
      v = unit(rng);
    } else {
      u = frac(radical_inverse(k, 2) + d1);
      v = frac(radical_inverse(k, 3) + d2);
    }
    const double lon = lo + (hi - lo) * u;
    const double z = zmax * (2 * v - 1);
    const double r = std::sqrt(std::max(0.0, 1 - z * z));
    const double p[3] = {r * std::cos(lon), r * std::sin(lon), z};
    if (distance_to_equator_arc(p, arc) < rho) pts.push_back({p[0], p[1], p[2]});
    if (k > 1000 * n) throw ConstructionError("region sampler made no progress");
  }
  return pts;
}

}  // namespace

double ScenarioSpec::param(std::string_view key, double fallback) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return fallback;
}

void ScenarioSpec::set(std::string key, double value) {
  for (auto& [k, v] : params)
    if (k == key) {
      v = value;
      return;
    }
  params.emplace_back(std::move(key), value);
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"circle_E2",         "segment_E2", "sphere_E3", "cylinder_E3",
                                                 "clifford_torus_S3", "tube_S2",    "band_S2",   "equidistant_H2"};
  return names;
}

double distance_to_equator_arc(std::span<const double> x, double L) {
  const double lat = std::asin(std::clamp(x[2], -1.0, 1.0));
  if (L >= 2 * kPi) return std::abs(lat);
  const double lon = std::atan2(x[1], x[0]);
  if (lon >= 0 && lon <= L) return std::abs(lat);
  const double d0 = std::acos(std::clamp(x[0], -1.0, 1.0));
  const double d1 = std::acos(std::clamp(x[0] * std::cos(L) + x[1] * std::sin(L), -1.0, 1.0));
  return std::min(d0, d1);
}

GroundTruth scenario_truth(const ScenarioSpec& spec) {
  const std::string& nm = spec.name;
  GroundTruth t;
  t.closed_geodesic_length = kNaN;
  if (nm == "circle_E2") {
    const double R = spec.param("R", 1.0);
    require(R > 0, "circle_E2 needs R > 0");
    t = {0.0, 1 / R, kNaN, false, kPi * R, false, 2 * kPi * R,
         "planar circle: chord r = 2R sin(s / 2R)"};
  } else if (nm == "segment_E2") {
    const double L = spec.param("L", 1.0);
    require(L > 0, "segment_E2 needs L > 0");
    t = {0.0, 0.0, kNaN, false, kInf, false, kNaN, "straight segment: chord equals arc"};
  } else if (nm == "sphere_E3") {
    const double R = spec.param("R", 1.0);
    require(R > 0, "sphere_E3 needs R > 0");
    t = {0.0, 1 / R, 1 / (R * R), false, kPi * R, false, 2 * kPi * R,
         "round sphere: great circles have r = 2R sin(s / 2R); intrinsically CAT(1/R^2)"};
  } else if (nm == "cylinder_E3") {
    const double R = spec.param("R", 1.0);
    const double H = spec.param("H", kPi * R);
    require(R > 0 && H > 0, "cylinder_E3 needs R > 0 and H > 0");
    t = {0.0, 1 / R, 0.0, false, kPi * R, false, 2 * kPi * R,
         "round cylinder: flat intrinsic metric, normal curvature at most 1/R"};
  } else if (nm == "clifford_torus_S3") {
    t = {1.0, 1.0, 0.0, false, kPi / std::sqrt(2.0), false, kPi * std::sqrt(2.0),
         "Clifford torus: flat square torus of side pi sqrt 2, principal curvatures +-1 in S^3"};
  } else if (nm == "tube_S2" || nm == "band_S2") {
    const double rho = spec.param("rho", kPi / 6);
    require(rho > 0 && rho < kPi / 2, "tube radius must lie in (0, pi/2)");
    if (nm == "tube_S2") {
      const double L = spec.param("L", 2.0);
      require(L > 0 && L < kPi, "tube core length must lie in (0, pi)");
    }
    const double sec = 1 / std::cos(rho);
    t = {1.0, std::tan(rho), sec * sec, true, kPi * std::cos(rho), true,
         nm == "band_S2" ? 2 * kPi * std::cos(rho) : kNaN,
         "rho-neighborhood of a great-circle arc in S^2: boundary arcs are equidistant curves of "
         "geodesic curvature tan(rho)"};
  } else if (nm == "equidistant_H2") {
    const double rho = spec.param("rho", 0.5);
    require(rho > 0, "equidistant_H2 needs rho > 0");
    t = {-1.0, std::tanh(rho), kNaN, false, kInf, false, kNaN,
         "curve at distance rho from a geodesic of H^2: geodesic curvature tanh(rho)"};
  } else {
    throw DomainError("unknown scenario: " + nm);
  }
  return t;
}

Scenario generate(const ScenarioSpec& spec, Execution ex) {
  if (spec.n == 0) throw DomainError("empty scenario: sample count must be positive");
  if (spec.n < 2) throw DomainError("a scenario needs at least two points");
  GroundTruth truth = scenario_truth(spec);
  Model model = model_for(spec);
  std::mt19937_64 rng(spec.seed);
  const MeshPolicy pol = effective_policy(spec);
  const std::size_t n = spec.n;
  const Lattice lat{pol, n, unit(rng), unit(rng), &rng};
  const std::string& nm = spec.name;
  PointCloud pts;
  std::vector<std::pair<std::string, double>> params;

  if (nm == "circle_E2") {
    const double R = spec.param("R", 1.0);
    params = {{"R", R}};
    for (std::size_t i = 0; i < n; ++i) {
      const double th = pol == MeshPolicy::random ? 2 * kPi * unit(rng)
                                                  : 2 * kPi * (static_cast<double>(i) + lat.d1) / static_cast<double>(n);
      pts.push_back({R * std::cos(th), R * std::sin(th)});
    }
  } else if (nm == "segment_E2") {
    const double L = spec.param("L", 1.0);
    params = {{"L", L}};
    for (std::size_t i = 0; i < n; ++i)
      pts.push_back({L * static_cast<double>(i) / static_cast<double>(n - 1), 0.0});
  } else if (nm == "sphere_E3") {
    const double R = spec.param("R", 1.0);
    params = {{"R", R}};
    for (std::size_t i = 0; i < n; ++i) {
      const auto [a, b] = lat.at(i);
      const double z = 1 - 2 * a;
      const double r = std::sqrt(std::max(0.0, 1 - z * z));
      const double ph = 2 * kPi * b;
      pts.push_back({R * r * std::cos(ph), R * r * std::sin(ph), R * z});
    }
  } else if (nm == "cylinder_E3") {
    const double R = spec.param("R", 1.0);
    const double H = spec.param("H", kPi * R);
    params = {{"R", R}, {"H", H}};
    for (std::size_t i = 0; i < n; ++i) {
      const auto [a, b] = lat.at(i);
      const double ph = 2 * kPi * b;
      pts.push_back({R * std::cos(ph), R * std::sin(ph), H * (a - 0.5)});
    }
  } else if (nm == "clifford_torus_S3") {
    const double s = 1 / std::sqrt(2.0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto [a, b] = lat.at(i);
      const double u = 2 * kPi * a, v = 2 * kPi * b;
      pts.push_back({s * std::cos(u), s * std::sin(u), s * std::cos(v), s * std::sin(v)});
    }
  } else if (nm == "tube_S2" || nm == "band_S2") {
    params = {{"rho", model.rho}};
    if (nm == "tube_S2") params.emplace_back("L", model.arc);
    pts = sample_region(spec, model.rho, model.arc, rng);
  } else if (nm == "equidistant_H2") {
    const double rho = spec.param("rho", 0.5);
    const double L = spec.param("L", 4.0);
    params = {{"rho", rho}, {"L", L}};
    const Curvature K(-1.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double sigma = -0.5 * L + L * static_cast<double>(i) / static_cast<double>(n - 1);
      const auto p = ModelPoint::fermi(K, sigma / std::cosh(rho), rho).coords();
      pts.push_back({p[0], p[1], p[2]});
    }
  }

  const double mesh = max_nn_distance(pts, model.ambient, ex);
  BuildOptions opts;
  opts.eps = spec.eps > 0 ? spec.eps : spec.eps_factor * mesh;
  opts.execution = ex;
  Scenario sc{spec, {}, truth, {}};
  if (model.region) {
    // Tolerance for a chord of length ~mesh bulging past an equidistant
    // boundary arc of curvature tan(rho): its width is tan(rho) mesh^2 / 8.
    const double tau = std::tan(model.rho) * mesh * mesh / 8.0;
    opts.edge_filter = region_filter(pts, model.rho, model.arc, tau);
    sc.space = SampledSpace::build(pts, model.ambient, opts);
  } else {
    sc.space = SampledSpace::build(std::move(pts), model.ambient, opts);
  }
  sc.space.label = nm;
  sc.space.params = params;
  sc.space.seed = spec.seed;

  if (nm == "band_S2") {
    // Upper boundary circle, in longitude order.
    const std::size_t nb = n / 5;
    std::vector<std::size_t> loop(nb);
    for (std::size_t j = 0; j < nb; ++j) loop[j] = j;
    sc.loops.push_back(std::move(loop));
  }
  return sc;
}

SampledSpace import_space(const std::string& json_text, Execution ex) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  const std::string ambient = j.at("ambient").get<std::string>();
  BuildOptions opts;
  opts.eps = j.at("eps").get<double>();
  opts.execution = ex;
  PointCloud pts;
  for (const auto& p : j.at("points")) pts.push_back(p.get<std::vector<double>>());
  std::vector<std::pair<std::string, double>> params;
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items()) params.emplace_back(k, v.get<double>());
  SampledSpace space;
  if (ambient == "matrix") {
    std::vector<double> m;
    std::size_t n = 0;
    for (const auto& row : j.at("matrix")) {
      for (const auto& v : row) m.push_back(v.get<double>());
      ++n;
    }
    space = SampledSpace::build_from_matrix(std::move(m), n, opts, std::move(pts));
  } else {
    ScenarioSpec spec;
    spec.name = ambient;
    spec.params = params;
    const Model model = model_for(spec);
    if (pts.size() < 2) throw ConstructionError("a sampled space needs at least two points");
    if (model.region) {
      const double mesh = max_nn_distance(pts, model.ambient, ex);
      opts.edge_filter = region_filter(pts, model.rho, model.arc, std::tan(model.rho) * mesh * mesh / 8.0);
    }
    space = SampledSpace::build(pts, model.ambient, opts);
  }
  space.label = ambient;
  space.params = params;
  space.seed = j.value("seed", std::uint64_t{0});
  return space;
}

}  // namespace catgeo
