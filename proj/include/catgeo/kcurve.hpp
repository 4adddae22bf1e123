#pragma once

#include <string_view>

#include "catgeo/model_space.hpp"

namespace catgeo {

enum class KCurveClass { geodesic, circle, horocycle, equidistant };

std::string_view to_string(KCurveClass c);

// |k^2 + K| below this is treated as the horocycle.
inline constexpr double kHorocycleTol = 1e-10;

KCurveClass classify(double K, double k);

// Length of the complete k-curve; +inf unless K + k^2 > 0.
double circumference(double k, double K);

// A curve of constant geodesic curvature k >= 0 in S_K.
//
// The scalar relations below are exact. They come from realized model
// triangles: for a circle of intrinsic radius t1 the center and the two
// endpoints of an arc form an isosceles triangle with apex angle s / sn(t1);
// the equidistant case uses Fermi quadrilaterals over the base geodesic and
// the horocycle its limit. Writing Kc = K + k^2, all classes collapse to
//   md_K(chord)   = md_Kc(s)
//   tan(phi)      = k tan_Kc(s / 2)
//   tan_K(width)  = k md_Kc(s/2) / (1 - K md_Kc(s/2))
// point_at gives the explicit embedding used to cross-check them.
class KCurve {
 public:
  KCurve(double K, double k);

  double K() const { return K_; }
  double k() const { return k_; }
  KCurveClass kind() const { return kind_; }

  // Intrinsic radius t1 with cs_K(t1) / sn_K(t1) = k (circles and great
  // circles), or the distance rho to the base geodesic (equidistant curves).
  // +inf for horocycles and geodesics of K <= 0.
  double radius() const;

  double circumference() const;
  // Longest admissible arclength for the monotone relations: half the
  // circumference, +inf for open curves.
  double half_length() const;

  double arc_to_chord(double s) const;
  double chord_to_arc(double r) const;
  double base_angle(double s) const;
  double width(double s) const;
  // Distance from the chord point at arclength u to the arc with chord r.
  double chordpoint_width(double r, double u) const;
  // Length distortion of the nearest-point projection onto the curve for a
  // point at distance d on its concave side: 1 / (cs_K(d) - k sn_K(d)).
  double projection_lipschitz_ratio(double d) const;

  // Explicit realization, symmetric about the x2 axis: the arc of length s
  // spans point_at(-s/2) .. point_at(s/2), and the curve bends toward -x2.
  ModelPoint point_at(double sigma) const;
  // Concave-side signed distance of a point to the complete curve (positive
  // on the side the curve bends toward) and the arclength parameter of its
  // nearest-point projection, in the realization of point_at.
  double signed_distance(const ModelPoint& x) const;
  double projection_parameter(const ModelPoint& x) const;

 private:
  double Kc() const { return K_ + k_ * k_; }
  void check_arclength(double s) const;

  double K_;
  double k_;
  KCurveClass kind_;
};

double arc_to_chord(double K, double k, double s);
double chord_to_arc(double K, double k, double r);
double base_angle(double K, double k, double s);
double width(double K, double k, double s);
double chordpoint_width(double K, double k, double r, double u);
double projection_lipschitz_ratio(double K, double k, double d);
double closed_curve_length_bound(double K, double k);

// The k' >= 0 for which a k'-arc of length s in S_K has chord r.
double solve_k_prime(double K, double s, double r);

}  // namespace catgeo
