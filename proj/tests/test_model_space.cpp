#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "catgeo/errors.hpp"
#include "catgeo/model_space.hpp"

using namespace catgeo;

namespace {

constexpr double kPi = std::numbers::pi;

// Distance between two points in geodesic polar coordinates, from the
// spherical / hyperbolic cosine rule written with std functions.
double polar_distance_oracle(double K, double r1, double t1, double r2, double t2) {
  const double dt = t1 - t2;
  if (K == 0) return std::sqrt(r1 * r1 + r2 * r2 - 2 * r1 * r2 * std::cos(dt));
  const double s = std::sqrt(std::abs(K));
  if (K > 0) {
    const double c = std::cos(s * r1) * std::cos(s * r2) + std::sin(s * r1) * std::sin(s * r2) * std::cos(dt);
    return std::acos(std::clamp(c, -1.0, 1.0)) / s;
  }
  const double c = std::cosh(s * r1) * std::cosh(s * r2) - std::sinh(s * r1) * std::sinh(s * r2) * std::cos(dt);
  return std::acosh(std::max(1.0, c)) / s;
}

}  // namespace

TEST(ModelSpace, EuclideanThreeFourFive) {
  const ModelPoint p(Curvature(0), {1, 0, 0}), q(Curvature(0), {1, 3, 4});
  EXPECT_DOUBLE_EQ(distance(p, q), 5.0);
}

TEST(ModelSpace, DistanceMatchesCosineRule) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> Ur(0.05, 1.2), Ut(0, 2 * kPi);
  for (double K : {-2.0, -1.0, 0.0, 0.5, 1.0}) {
    for (int i = 0; i < 200; ++i) {
      const double r1 = Ur(rng), t1 = Ut(rng), r2 = Ur(rng), t2 = Ut(rng);
      const double d = distance(ModelPoint::polar(Curvature(K), r1, t1), ModelPoint::polar(Curvature(K), r2, t2));
      EXPECT_NEAR(d, polar_distance_oracle(K, r1, t1, r2, t2), 1e-9) << "K=" << K;
    }
  }
}

TEST(ModelSpace, DistanceIsAMetric) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> Ur(0, 1), Ut(0, 2 * kPi);
  for (double K : {-1.0, 0.0, 1.0}) {
    const Curvature C(K);
    for (int i = 0; i < 300; ++i) {
      const ModelPoint a = ModelPoint::polar(C, Ur(rng), Ut(rng)), b = ModelPoint::polar(C, Ur(rng), Ut(rng)),
                       c = ModelPoint::polar(C, Ur(rng), Ut(rng));
      EXPECT_EQ(distance(a, b), distance(b, a));
      EXPECT_EQ(distance(a, a), 0.0);
      EXPECT_LE(distance(a, c), distance(a, b) + distance(b, c) + 1e-12);
      if (K > 0) EXPECT_LE(distance(a, b), kPi / std::sqrt(K));
    }
  }
}

TEST(ModelSpace, SmallCurvatureApproachesEuclidean) {
  for (double K : {1e-8, -1e-8}) {
    const ModelPoint a = ModelPoint::polar(Curvature(K), 0.7, 0.2), b = ModelPoint::polar(Curvature(K), 1.1, 2.0);
    const double e = polar_distance_oracle(0.0, 0.7, 0.2, 1.1, 2.0);
    EXPECT_NEAR(distance(a, b), e, 1e-6 * e);
    EXPECT_NEAR(law_of_cosines_angle(K, 1.0, 0.8, 0.6), std::acos((0.64 + 0.36 - 1.0) / (2 * 0.8 * 0.6)), 1e-6);
  }
}

TEST(ModelSpace, RejectsPointsOffTheQuadric) {
  EXPECT_THROW(ModelPoint(Curvature(1), {1.1, 0, 0}), DomainError);
  EXPECT_THROW(ModelPoint(Curvature(-1), {-1, 0, 0}), DomainError);
  EXPECT_THROW(distance(ModelPoint::origin(Curvature(1)), ModelPoint::origin(Curvature(0))), DomainError);
  // Moderate drift is projected back; tiny drift is kept as given.
  const ModelPoint p(Curvature(1), {1 + 1e-8, 0, 0});
  EXPECT_NEAR(p.residual(), 0.0, 1e-15);
  const ModelPoint q(Curvature(1), {1 + 1e-10, 0, 0});
  EXPECT_EQ(q.coords()[0], 1 + 1e-10);
}

TEST(ModelSpace, GeodesicEvalSplitsDistance) {
  for (double K : {-1.0, 0.0, 1.0}) {
    const ModelPoint p = ModelPoint::polar(Curvature(K), 0.8, 0.3), q = ModelPoint::polar(Curvature(K), 1.0, 2.4);
    const double d = distance(p, q);
    for (double t : {0.0, 0.25, 0.5, 1.0}) {
      const ModelPoint x = geodesic_eval(p, q, t);
      EXPECT_NEAR(distance(p, x), t * d, 1e-12);
      EXPECT_NEAR(distance(x, q), (1 - t) * d, 1e-12);
    }
  }
  const ModelPoint n(Curvature(1), {0, 0, 1}), s(Curvature(1), {0, 0, -1});
  EXPECT_THROW(geodesic_eval(n, s, 0.5), DomainError);
}

TEST(ModelSpace, AngleAtOriginIsPolarAngleDifference) {
  for (double K : {-1.0, 0.0, 1.0}) {
    const Curvature C(K);
    EXPECT_NEAR(angle_at(ModelPoint::origin(C), ModelPoint::polar(C, 0.5, 0.3), ModelPoint::polar(C, 0.9, 1.4)), 1.1,
                1e-12);
  }
}

TEST(ModelSpace, LawOfCosinesMatchesCosineForm) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0.1, 1.0);
  for (double K : {-1.0, 0.0, 1.0}) {
    for (int i = 0; i < 300; ++i) {
      const double b = U(rng), c = U(rng), alpha = kPi * U(rng) * 0.95;
      const double a = polar_distance_oracle(K, b, 0.0, c, alpha);
      EXPECT_NEAR(law_of_cosines_side(K, b, c, alpha), a, 1e-12);
      EXPECT_NEAR(law_of_cosines_angle(K, a, b, c), alpha, 1e-7);
    }
  }
}

TEST(ModelSpace, ComparisonTriangleRealizesSides) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> U(0.2, 1.0);
  for (double K : {-1.0, 0.0, 1.0}) {
    for (int i = 0; i < 200; ++i) {
      double a = U(rng), b = U(rng), c = U(rng);
      if (a > b + c || b > a + c || c > a + b) continue;
      const ModelTriangle t = comparison_triangle(a, b, c, Curvature(K));
      EXPECT_NEAR(distance(t.B, t.C), a, 1e-12);
      EXPECT_NEAR(distance(t.C, t.A), b, 1e-12);
      EXPECT_NEAR(distance(t.A, t.B), c, 1e-12);
      EXPECT_NEAR(t.alpha, angle_at(t.A, t.B, t.C), 1e-7);
      if (K == 0) EXPECT_NEAR(t.alpha + t.beta + t.gamma, kPi, 1e-7);
      if (K > 0) EXPECT_GT(t.alpha + t.beta + t.gamma, kPi);
      if (K < 0) EXPECT_LT(t.alpha + t.beta + t.gamma, kPi);
    }
  }
}

TEST(ModelSpace, ComparisonTriangleErrors) {
  EXPECT_THROW(comparison_triangle(1.0, 0.2, 0.2, Curvature(0)), DomainError);
  EXPECT_THROW(comparison_triangle(2.5, 2.5, 2.5, Curvature(1)), DomainError);
  EXPECT_THROW(comparison_triangle(-1.0, 1.0, 1.0, Curvature(0)), DomainError);
}

TEST(ModelSpace, SphericalOctantMidpoint) {
  const double h = kPi / 2;
  EXPECT_NEAR(comparison_distance(1.0, h, h, h, 0.5), h, 1e-12);
  const ModelTriangle t = comparison_triangle(h, h, h, Curvature(1));
  EXPECT_NEAR(distance(t.A, comparison_point(t, Side::BC, 0.5)), h, 1e-12);
}

TEST(ModelSpace, ComparisonPointEndpointsAndStewart) {
  const ModelTriangle t = comparison_triangle(0.9, 0.7, 0.8, Curvature(-1));
  EXPECT_NEAR(distance(comparison_point(t, Side::BC, 0.0), t.B), 0.0, 1e-12);
  EXPECT_NEAR(distance(comparison_point(t, Side::AB, 1.0), t.B), 0.0, 1e-12);
  EXPECT_NEAR(distance(comparison_point(t, Side::CA, 0.0), t.C), 0.0, 1e-12);
  for (double s : {0.25, 0.5, 0.75})
    EXPECT_NEAR(comparison_distance(-1.0, 0.9, 0.7, 0.8, s), distance(t.A, comparison_point(t, Side::BC, s)), 1e-12);
  // Euclidean midpoint: Apollonius, m^2 = (2b^2 + 2c^2 - a^2) / 4.
  EXPECT_NEAR(comparison_distance(0.0, 3, 4, 5, 0.5), std::sqrt((2 * 16 + 2 * 25 - 9) / 4.0), 1e-12);
}

TEST(ModelSpace, FourPointUnfolding) {
  // Euclidean oracle: B = (0,0), C = (a,0), A above, X below the line BC.
  const double a = 1.0, b = 0.9, c = 0.8, x1 = 0.45, x2 = 0.6;
  const double Ax = (c * c - b * b + a * a) / (2 * a), Ay = std::sqrt(c * c - Ax * Ax);
  const double Xx = (x1 * x1 - x2 * x2 + a * a) / (2 * a), Xy = -std::sqrt(x1 * x1 - Xx * Xx);
  EXPECT_NEAR(four_point_distance(0.0, a, b, c, x1, x2), std::hypot(Ax - Xx, Ay - Xy), 1e-12);
  // On the side itself it reduces to the comparison distance.
  for (double K : {-1.0, 0.0, 1.0})
    EXPECT_NEAR(four_point_distance(K, a, b, c, 0.3, 0.7), comparison_distance(K, a, b, c, 0.3), 1e-12);
  // Hinge capped at pi: distance is c + x1.
  EXPECT_NEAR(four_point_distance(0.0, 1.0, 1.9, 1.0, 1.0, 1.99), 2.0, 1e-12);
}
