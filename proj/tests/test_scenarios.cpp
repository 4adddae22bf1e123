#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "catgeo/errors.hpp"
#include "catgeo/model_space.hpp"
#include "catgeo/scenarios.hpp"

using namespace catgeo;

namespace {

constexpr double kPi = std::numbers::pi;

Scenario make(const std::string& name, std::size_t n, std::uint64_t seed = 1,
              std::vector<std::pair<std::string, double>> params = {}) {
  ScenarioSpec spec;
  spec.name = name;
  spec.n = n;
  spec.seed = seed;
  spec.params = std::move(params);
  return generate(spec);
}

ModelPoint model_point(double K, std::span<const double> p) { return ModelPoint(Curvature(K), {p[0], p[1], p[2]}); }

}  // namespace

TEST(Scenarios, CatalogAndErrors) {
  EXPECT_EQ(scenario_names().size(), 8u);
  for (const auto& name : scenario_names()) EXPECT_NO_THROW(make(name, 200));
  EXPECT_THROW(make("klein_bottle", 100), DomainError);
  EXPECT_THROW(make("tube_S2", 100, 1, {{"rho", kPi / 2}}), DomainError);
  EXPECT_THROW(make("tube_S2", 100, 1, {{"L", 4.0}}), DomainError);
  EXPECT_THROW(make("sphere_E3", 0), DomainError);
  EXPECT_THROW(make("sphere_E3", 100, 1, {{"R", -1.0}}), DomainError);
}

TEST(Scenarios, Deterministic) {
  for (const std::string name : {"sphere_E3", "tube_S2", "band_S2", "clifford_torus_S3"}) {
    const Scenario a = make(name, 400, 5), b = make(name, 400, 5), c = make(name, 400, 6);
    EXPECT_EQ(a.space.points().coords, b.space.points().coords) << name;
    EXPECT_EQ(a.space.intrinsic_matrix(), b.space.intrinsic_matrix()) << name;
    EXPECT_NE(a.space.points().coords, c.space.points().coords) << name;
  }
}

TEST(Scenarios, AmbientDistancesMatchModelSpace) {
  const Scenario tube = make("tube_S2", 300);
  const Scenario hyp = make("equidistant_H2", 200);
  for (const auto* sc : {&tube, &hyp}) {
    const double K = sc->truth.ambient_K;
    const auto& pts = sc->space.points();
    for (std::size_t i = 0; i < pts.size(); i += 7)
      for (std::size_t j = 0; j < pts.size(); j += 5)
        EXPECT_NEAR(sc->space.ambient(i, j), distance(model_point(K, pts[i]), model_point(K, pts[j])), 1e-12);
  }
  const Scenario sph = make("sphere_E3", 200, 1, {{"R", 2.0}});
  for (std::size_t i = 0; i < 200; i += 3) {
    const auto p = sph.space.points()[i];
    EXPECT_NEAR(std::hypot(p[0], p[1], p[2]), 2.0, 1e-14);
  }
}

TEST(Scenarios, CurveScenarios) {
  const Scenario seg = make("segment_E2", 100);
  for (std::size_t i = 0; i < 100; ++i)
    for (std::size_t j = 0; j < 100; ++j) EXPECT_NEAR(seg.space.intrinsic(i, j), seg.space.ambient(i, j), 1e-12);
  const Scenario circ = make("circle_E2", 500);
  EXPECT_NEAR(circ.space.mesh(), 2 * std::sin(kPi / 500), 1e-12);
  EXPECT_DOUBLE_EQ(circ.truth.A, 1.0);
  // Points of the equidistant curve keep Fermi height rho.
  const Scenario eq = make("equidistant_H2", 100, 1, {{"rho", 0.5}});
  for (std::size_t i = 0; i < 100; ++i)
    EXPECT_NEAR(std::asinh(eq.space.points()[i][2]), 0.5, 1e-12);
  EXPECT_NEAR(eq.truth.A, std::tanh(0.5), 1e-15);
}

TEST(Scenarios, RegionMembershipAndEdges) {
  const double rho = kPi / 6, L = 2.0;
  const Scenario sc = make("tube_S2", 600, 3, {{"rho", rho}, {"L", L}});
  const auto& pts = sc.space.points();
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_LE(distance_to_equator_arc(pts[i], L), rho + 1e-12);
  // Shortest paths stay in the region: every hop midpoint is within rho + tau.
  const double tau = std::tan(rho) * sc.space.mesh() * sc.space.mesh() / 8;
  for (std::size_t i = 0; i < pts.size(); i += 37) {
    const auto path = sc.space.discrete_geodesic(i, (i * 7 + 11) % pts.size());
    for (std::size_t h = 1; h < path.size(); ++h) {
      const auto a = pts[path[h - 1]], b = pts[path[h]];
      double m[3] = {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
      const double nm = std::hypot(m[0], m[1], m[2]);
      for (double& x : m) x /= nm;
      EXPECT_LE(distance_to_equator_arc(m, L), rho + tau + 1e-12);
    }
  }
  EXPECT_TRUE(sc.truth.cba_is_upper_bound);
  EXPECT_NEAR(sc.truth.cba, 1 / (std::cos(rho) * std::cos(rho)), 1e-14);
}

TEST(Scenarios, BandBoundaryLoop) {
  const double rho = kPi / 6;
  const Scenario sc = make("band_S2", 1000, 2, {{"rho", rho}});
  ASSERT_EQ(sc.loops.size(), 1u);
  const auto& loop = sc.loops.front();
  double len = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    EXPECT_NEAR(sc.space.points()[loop[i]][2], std::sin(rho), 1e-14);
    len += sc.space.ambient(loop[i], loop[(i + 1) % loop.size()]);
  }
  EXPECT_NEAR(len, 2 * kPi * std::cos(rho), 1e-3);
  EXPECT_NEAR(sc.truth.closed_geodesic_length, 2 * kPi * std::cos(rho), 1e-14);
}

TEST(Scenarios, DistanceToEquatorArc) {
  const double north[3] = {0, 0, 1};
  EXPECT_NEAR(distance_to_equator_arc(north, 1.0), kPi / 2, 1e-15);
  const double p[3] = {std::cos(-0.5), std::sin(-0.5), 0};
  EXPECT_NEAR(distance_to_equator_arc(p, 1.0), 0.5, 1e-15);
  EXPECT_NEAR(distance_to_equator_arc(p, 2 * kPi), 0.0, 1e-15);
}
