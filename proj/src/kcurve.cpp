#include "catgeo/kcurve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "catgeo/errors.hpp"
#include "catgeo/roots.hpp"
#include "catgeo/trig.hpp"

namespace catgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

}  // namespace

std::string_view to_string(KCurveClass c) {
  switch (c) {
    case KCurveClass::geodesic:
      return "geodesic";
    case KCurveClass::circle:
      return "circle";
    case KCurveClass::horocycle:
      return "horocycle";
    case KCurveClass::equidistant:
      return "equidistant";
  }
  return "unknown";
}

KCurveClass classify(double K, double k) {
  if (!(k >= 0) || !std::isfinite(k) || !std::isfinite(K))
    throw DomainError("geodesic curvature must be finite and nonnegative");
  if (k == 0) return KCurveClass::geodesic;
  if (K < 0 && std::abs(k * k + K) < kHorocycleTol) return KCurveClass::horocycle;
  if (K < 0 && k * k < -K) return KCurveClass::equidistant;
  return KCurveClass::circle;
}

double circumference(double k, double K) { return KCurve(K, k).circumference(); }

KCurve::KCurve(double K, double k) : K_(K), k_(k), kind_(classify(K, k)) {
  if (kind_ == KCurveClass::horocycle) k_ = std::sqrt(-K);
}

double KCurve::radius() const {
  switch (kind_) {
    case KCurveClass::circle:
      return arctan_k(K_, 1.0 / k_);
    case KCurveClass::geodesic:
      return K_ > 0 ? 0.5 * kPi / std::sqrt(K_) : kInf;
    case KCurveClass::equidistant: {
      const double q = std::sqrt(-K_);
      return std::atanh(k_ / q) / q;
    }
    case KCurveClass::horocycle:
      return kInf;
  }
  return kInf;
}

double KCurve::circumference() const {
  const bool closed = kind_ == KCurveClass::circle || (kind_ == KCurveClass::geodesic && K_ > 0);
  if (!closed) return kInf;
  return 2.0 * kPi * sn_k(K_, radius());
}

double KCurve::half_length() const { return 0.5 * circumference(); }

void KCurve::check_arclength(double s) const {
  if (!(s >= 0) || s > circumference()) throw DomainError("arclength exceeds the circumference");
}

double KCurve::arc_to_chord(double s) const {
  check_arclength(s);
  if (kind_ == KCurveClass::geodesic) {
    if (K_ <= 0 || s <= kPi / std::sqrt(K_)) return s;
    return 2.0 * kPi / std::sqrt(K_) - s;
  }
  const double m = md_k(Kc(), s);
  return inv_md_k(K_, K_ > 0 ? std::min(m, 2.0 / K_) : m);
}

double KCurve::chord_to_arc(double r) const {
  const double hi_s = half_length();
  const double max_chord = std::isinf(hi_s) ? kInf : arc_to_chord(hi_s);
  if (!(r >= 0) || r > max_chord * (1.0 + 1e-15)) throw DomainError("chord exceeds the diameter");
  if (r == 0) return 0.0;
  if (kind_ == KCurveClass::geodesic) return r;
  double hi = hi_s;
  if (std::isinf(hi)) {
    hi = 2.0 * r;
    while (arc_to_chord(hi) < r) hi *= 2.0;
  }
  auto f = [&](double s, double* df) {
    *df = std::cos(base_angle(s));
    return arc_to_chord(s) - r;
  };
  return find_root(f, r, hi);
}

double KCurve::base_angle(double s) const {
  if (!(s >= 0) || s > half_length()) throw DomainError("arclength outside (0, c/2]");
  if (kind_ == KCurveClass::geodesic) return 0.0;
  return std::atan(k_ * tan_k(Kc(), 0.5 * s));
}

double KCurve::width(double s) const {
  if (!(s >= 0) || s > half_length()) throw DomainError("arclength outside (0, c/2]");
  if (kind_ == KCurveClass::geodesic) return 0.0;
  const double m = md_k(Kc(), 0.5 * s);
  return arctan_k(K_, k_ * m / (1.0 - K_ * m));
}

double KCurve::chordpoint_width(double r, double u) const {
  if (!(u >= 0 && u <= r)) throw DomainError("chord parameter outside [0, r]");
  const double s = chord_to_arc(r);
  if (u == 0 || u == r || kind_ == KCurveClass::geodesic) return 0.0;
  const double v = r - u;
  if (kind_ == KCurveClass::circle) {
    // Center C, chord midpoint M at height h, chord point X; the isosceles
    // triangle C-P1-P2 and the right triangles at M give md(t1) - md(CX)
    // as an exact product, which is then converted to t1 - |CX|.
    const double t1 = radius();
    const double cs_h = cs_k(K_, t1) / cs_k(K_, 0.5 * r);
    const double delta = 2.0 * sn_k(K_, 0.5 * u) * sn_k(K_, 0.5 * v) * cs_h;
    const double cx = inv_md_k(K_, md_k(K_, t1) - delta);
    return 2.0 * arcsn_k(K_, delta / (2.0 * sn_k(K_, 0.5 * (t1 + cx))));
  }
  const ModelPoint p1 = point_at(-0.5 * s);
  const ModelPoint p2 = point_at(0.5 * s);
  return std::max(0.0, signed_distance(geodesic_eval(p1, p2, u / r)));
}

double KCurve::projection_lipschitz_ratio(double d) const {
  const double den = cs_k(K_, d) - k_ * sn_k(K_, d);
  if (!(d >= 0) || !(den > 0)) throw DomainError("distance beyond the focal distance");
  return 1.0 / den;
}

ModelPoint KCurve::point_at(double sigma) const {
  const Curvature K(K_);
  switch (kind_) {
    case KCurveClass::circle: {
      const double t1 = radius();
      return ModelPoint::polar(K, t1, 0.5 * kPi - sigma / sn_k(K_, t1));
    }
    case KCurveClass::geodesic:
      if (K_ > 0) return ModelPoint::polar(K, radius(), 0.5 * kPi - sigma * std::sqrt(K_));
      return ModelPoint::fermi(K, sigma, 0.0);
    case KCurveClass::equidistant: {
      const double rho = radius();
      return ModelPoint::fermi(K, sigma / cs_k(K_, rho), rho);
    }
    case KCurveClass::horocycle: {
      const double R = 1.0 / std::sqrt(-K_);
      const double a = sigma / R;
      return ModelPoint(K, {R * (1.0 + 0.5 * a * a), sigma, -0.5 * R * a * a});
    }
  }
  throw DomainError("unknown curve class");
}

double KCurve::signed_distance(const ModelPoint& x) const {
  if (!(x.curvature() == Curvature(K_))) throw DomainError("point lives in another model plane");
  const auto u = x.unified();
  switch (kind_) {
    case KCurveClass::circle:
      return radius() - distance(ModelPoint::origin(Curvature(K_)), x);
    case KCurveClass::geodesic:
      if (K_ > 0) return radius() - distance(ModelPoint::origin(Curvature(K_)), x);
      return -arcsn_k(K_, u[2]);
    case KCurveClass::equidistant:
      return radius() - arcsn_k(K_, u[2]);
    case KCurveClass::horocycle: {
      const double R = 1.0 / std::sqrt(-K_);
      const auto& c = x.coords();
      return -R * std::log1p((c[0] + c[2]) / R - 1.0);
    }
  }
  throw DomainError("unknown curve class");
}

double KCurve::projection_parameter(const ModelPoint& x) const {
  if (!(x.curvature() == Curvature(K_))) throw DomainError("point lives in another model plane");
  const auto u = x.unified();
  switch (kind_) {
    case KCurveClass::circle:
      return sn_k(K_, radius()) * (0.5 * kPi - std::atan2(u[2], u[1]));
    case KCurveClass::geodesic:
      if (K_ > 0) return (0.5 * kPi - std::atan2(u[2], u[1])) / std::sqrt(K_);
      return arctan_k(K_, u[1] / u[0]);
    case KCurveClass::equidistant:
      return cs_k(K_, radius()) * arctan_k(K_, u[1] / u[0]);
    case KCurveClass::horocycle: {
      const auto& c = x.coords();
      const double R = 1.0 / std::sqrt(-K_);
      return R * c[1] / (c[0] + c[2]);
    }
  }
  throw DomainError("unknown curve class");
}

double arc_to_chord(double K, double k, double s) { return KCurve(K, k).arc_to_chord(s); }
double chord_to_arc(double K, double k, double r) { return KCurve(K, k).chord_to_arc(r); }
double base_angle(double K, double k, double s) { return KCurve(K, k).base_angle(s); }
double width(double K, double k, double s) { return KCurve(K, k).width(s); }
double chordpoint_width(double K, double k, double r, double u) {
  return KCurve(K, k).chordpoint_width(r, u);
}
double projection_lipschitz_ratio(double K, double k, double d) {
  return KCurve(K, k).projection_lipschitz_ratio(d);
}
double closed_curve_length_bound(double K, double k) { return circumference(k, K); }

double solve_k_prime(double K, double s, double r) {
  if (!(s > 0) || !(r > 0)) throw DomainError("solve_k_prime needs positive arc and chord");
  if (r > s) throw DomainError("chord longer than arc");
  if (K > 0 && s + r >= 2.0 * kPi / std::sqrt(K)) throw DomainError("arc plus chord exceeds 2 pi / sqrt K");
  if (r == s) return 0.0;
  const double kmax2 = (kPi / s) * (kPi / s) - K;
  if (!(kmax2 > 0)) throw DomainError("no solution within bracket");
  const double kmax = std::sqrt(kmax2);
  auto f = [&](double k, double* df) {
    k = std::min(k, kmax);
    const double chord = arc_to_chord(K, k, s);
    // md_K(chord(k)) = md_{K+k^2}(s), differentiated in k.
    *df = 2.0 * k * md_k_dK(K + k * k, s) / sn_k(K, chord);
    return chord - r;
  };
  double dummy = 0.0;
  if (f(kmax, &dummy) > 0) throw DomainError("no solution within bracket");
  return find_root(f, 0.0, kmax);
}

}  // namespace catgeo
