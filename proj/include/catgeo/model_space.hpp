#pragma once

#include <array>

namespace catgeo {

// Curvature of a model plane S_K. The sign is derived on demand.
class Curvature {
 public:
  explicit Curvature(double K);
  double value() const { return K_; }
  int sign() const { return (K_ > 0) - (K_ < 0); }
  bool operator==(const Curvature& other) const = default;

 private:
  double K_;
};

// Point of S_K in the quadric embedding:
//   K > 0: K (x0^2 + x1^2 + x2^2) = 1         (sphere of radius 1/sqrt K)
//   K < 0: |K| (x0^2 - x1^2 - x2^2) = 1, x0 > 0 (hyperboloid sheet)
//   K = 0: x0 = 1, the point is (x1, x2)
// The origin is (1/sqrt|K|, 0, 0) (or (1, 0, 0) for K = 0) and the point at
// distance r in direction theta from it is
//   (cs_K(r) / sqrt|K|, sn_K(r) cos theta, sn_K(r) sin theta).
class ModelPoint {
 public:
  // Validates the embedding; coordinates drifting by more than 1e-9 are
  // projected back to the quadric, beyond 1e-6 DomainError is thrown.
  ModelPoint(Curvature K, const std::array<double, 3>& coords);

  static ModelPoint origin(Curvature K);
  // Geodesic polar coordinates about the origin.
  static ModelPoint polar(Curvature K, double r, double theta);
  // Fermi coordinates about the base geodesic through the origin along the
  // x1 axis: foot at arclength u, signed normal distance d.
  static ModelPoint fermi(Curvature K, double u, double d);

  const std::array<double, 3>& coords() const { return x_; }
  Curvature curvature() const { return K_; }

  // Normalized coordinates (u0, u1, u2) with u0^2 + K (u1^2 + u2^2) = 1.
  std::array<double, 3> unified() const;
  // Signed residual of the embedding equation.
  double residual() const;

 private:
  ModelPoint(Curvature K, const std::array<double, 3>& coords, bool /*trusted*/);
  Curvature K_;
  std::array<double, 3> x_;
};

double distance(const ModelPoint& p, const ModelPoint& q);

// Point at arclength t d(p, q) from p on the geodesic pq, t in [0, 1].
ModelPoint geodesic_eval(const ModelPoint& p, const ModelPoint& q, double t);

// Angle at p between the geodesics pq and pr, in [0, pi].
double angle_at(const ModelPoint& p, const ModelPoint& q, const ModelPoint& r);

enum class Side { BC, CA, AB };

// Model triangle with sides a = |BC|, b = |CA|, c = |AB| and angles alpha,
// beta, gamma at A, B, C. The realization puts A at the origin, B on the
// ray theta = 0 and C on the ray theta = alpha.
struct ModelTriangle {
  double a, b, c;
  double alpha, beta, gamma;
  Curvature K;
  ModelPoint A, B, C;
};

ModelTriangle comparison_triangle(double a, double b, double c, Curvature K);

// Point at parameter t along a side of the realized triangle: BC runs from
// B to C, CA from C to A, AB from A to B.
ModelPoint comparison_point(const ModelTriangle& tri, Side side, double t);

// Angle opposite side a in the S_K triangle with sides a, b, c, from the
// law of cosines in md form. Inputs must satisfy the triangle inequality
// up to rounding; the cosine is clamped.
double law_of_cosines_angle(double K, double a, double b, double c);

// Third side of the S_K triangle with sides b, c enclosing angle alpha.
double law_of_cosines_side(double K, double b, double c, double alpha);

// Distance from vertex A to the point at fraction t along BC of the S_K
// comparison triangle (Stewart's relation in md form).
double comparison_distance(double K, double a, double b, double c, double t);

// Four-point comparison: X is placed in S_K on the far side of BC from A
// with |BX| = x1 and |XC| = x2; returns |AX| after unfolding across BC
// (the hinge angle at B is capped at pi). With x1 + x2 = a this reduces to
// comparison_distance at t = x1 / a.
double four_point_distance(double K, double a, double b, double c, double x1, double x2);

}  // namespace catgeo
