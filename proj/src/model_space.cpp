#include "catgeo/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "catgeo/errors.hpp"
#include "catgeo/trig.hpp"

namespace catgeo {

namespace {

constexpr double kRenormTol = 1e-9;
constexpr double kRejectTol = 1e-6;

double residual_of(double K, const std::array<double, 3>& x) {
  if (K > 0) return K * (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) - 1.0;
  if (K < 0) return -K * (x[0] * x[0] - x[1] * x[1] - x[2] * x[2]) - 1.0;
  return x[0] - 1.0;
}

// Minkowski form with signature (+, -, -).
double lorentz(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2];
}

void require_same(const ModelPoint& p, const ModelPoint& q) {
  if (!(p.curvature() == q.curvature()))
    throw DomainError("model points live in different model planes");
}

}  // namespace

Curvature::Curvature(double K) : K_(K) {
  if (!std::isfinite(K)) throw DomainError("curvature must be finite");
}

ModelPoint::ModelPoint(Curvature K, const std::array<double, 3>& coords, bool)
    : K_(K), x_(coords) {}

ModelPoint::ModelPoint(Curvature K, const std::array<double, 3>& coords) : K_(K), x_(coords) {
  for (double v : x_)
    if (!std::isfinite(v)) throw DomainError("non-finite model point coordinate");
  const double k = K.value();
  if (k < 0 && x_[0] <= 0) throw DomainError("hyperboloid point must have x0 > 0");
  const double res = residual_of(k, x_);
  if (std::abs(res) > kRejectTol) throw DomainError("coordinates are off the model quadric");
  if (std::abs(res) > kRenormTol || (k == 0 && x_[0] != 1.0)) {
    if (k > 0) {
      const double s = 1.0 / std::sqrt(k * (x_[0] * x_[0] + x_[1] * x_[1] + x_[2] * x_[2]));
      for (double& v : x_) v *= s;
    } else if (k < 0) {
      const double s = 1.0 / std::sqrt(-k * lorentz(x_, x_));
      for (double& v : x_) v *= s;
    } else {
      x_[0] = 1.0;
    }
  }
}

ModelPoint ModelPoint::origin(Curvature K) {
  const double k = K.value();
  return ModelPoint(K, {k == 0 ? 1.0 : 1.0 / std::sqrt(std::abs(k)), 0.0, 0.0}, true);
}

ModelPoint ModelPoint::polar(Curvature K, double r, double theta) {
  const double k = K.value();
  const double s = sn_k(k, r);
  const double x0 = k == 0 ? 1.0 : cs_k(k, r) / std::sqrt(std::abs(k));
  return ModelPoint(K, {x0, s * std::cos(theta), s * std::sin(theta)});
}

ModelPoint ModelPoint::fermi(Curvature K, double u, double d) {
  const double k = K.value();
  if (k == 0) return ModelPoint(K, {1.0, u, d}, true);
  const double cd = cs_k(k, d);
  const double x0 = cd * cs_k(k, u) / std::sqrt(std::abs(k));
  return ModelPoint(K, {x0, cd * sn_k(k, u), sn_k(k, d)});
}

std::array<double, 3> ModelPoint::unified() const {
  const double k = K_.value();
  if (k == 0) return {1.0, x_[1], x_[2]};
  return {x_[0] * std::sqrt(std::abs(k)), x_[1], x_[2]};
}

double ModelPoint::residual() const { return residual_of(K_.value(), x_); }

double distance(const ModelPoint& p, const ModelPoint& q) {
  require_same(p, q);
  const double K = p.curvature().value();
  const auto& a = p.coords();
  const auto& b = q.coords();
  const double d0 = a[0] - b[0], d1 = a[1] - b[1], d2 = a[2] - b[2];
  if (K == 0) return std::hypot(d1, d2);
  // Squared chord in the ambient quadratic form; small-curvature series.
  const double chord2 = K > 0 ? d0 * d0 + d1 * d1 + d2 * d2 : std::max(0.0, d1 * d1 + d2 * d2 - d0 * d0);
  if (std::abs(K) * chord2 < kSeriesThreshold) return std::sqrt(chord2) * (1.0 + K * chord2 / 24.0);
  if (K > 0) {
    const double cx = a[1] * b[2] - a[2] * b[1];
    const double cy = a[2] * b[0] - a[0] * b[2];
    const double cz = a[0] * b[1] - a[1] * b[0];
    const double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot) / std::sqrt(K);
  }
  const double q2 = std::sqrt(-K);
  return 2.0 * std::asinh(0.5 * q2 * std::sqrt(chord2)) / q2;
}

ModelPoint geodesic_eval(const ModelPoint& p, const ModelPoint& q, double t) {
  require_same(p, q);
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("geodesic parameter outside [0, 1]");
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  const double K = p.curvature().value();
  const auto& a = p.coords();
  const auto& b = q.coords();
  if (K == 0)
    return ModelPoint(p.curvature(), {1.0, a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])});
  const double d = distance(p, q);
  if (d == 0.0) return p;
  if (K > 0 && std::numbers::pi - std::sqrt(K) * d < 1e-9)
    throw DomainError("geodesic between antipodal points is not unique");
  const double sd = sn_k(K, d);
  const double wa = sn_k(K, (1.0 - t) * d) / sd;
  const double wb = sn_k(K, t * d) / sd;
  return ModelPoint(p.curvature(),
                    {wa * a[0] + wb * b[0], wa * a[1] + wb * b[1], wa * a[2] + wb * b[2]});
}

double angle_at(const ModelPoint& p, const ModelPoint& q, const ModelPoint& r) {
  require_same(p, q);
  require_same(p, r);
  const double K = p.curvature().value();
  const auto& x = p.coords();
  std::array<double, 3> wq{}, wr{};
  // Positive definite form on the tangent plane at p.
  auto g = [K](const std::array<double, 3>& u, const std::array<double, 3>& v) {
    if (K < 0) return -lorentz(u, v);
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  };
  auto tangent = [&](const std::array<double, 3>& y) {
    std::array<double, 3> w{};
    if (K == 0) return std::array<double, 3>{0.0, y[1] - x[1], y[2] - x[2]};
    const double c = K > 0 ? K * (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) : -K * lorentz(x, y);
    for (int i = 0; i < 3; ++i) w[i] = y[i] - c * x[i];
    return w;
  };
  wq = tangent(q.coords());
  wr = tangent(r.coords());
  const double scale = K == 0 ? 1.0 : 1.0 / std::sqrt(std::abs(K));
  const double nq = std::sqrt(std::max(0.0, g(wq, wq)));
  const double nr = std::sqrt(std::max(0.0, g(wr, wr)));
  if (nq <= 1e-15 * scale || nr <= 1e-15 * scale || distance(p, q) == 0.0 || distance(p, r) == 0.0)
    throw DomainError("degenerate vertex in angle_at");
  std::array<double, 3> sum{}, diff{};
  for (int i = 0; i < 3; ++i) {
    sum[i] = wq[i] / nq + wr[i] / nr;
    diff[i] = wq[i] / nq - wr[i] / nr;
  }
  return 2.0 * std::atan2(std::sqrt(std::max(0.0, g(diff, diff))), std::sqrt(std::max(0.0, g(sum, sum))));
}

double law_of_cosines_angle(double K, double a, double b, double c) {
  // Half-angle form: sin^2(alpha/2) and cos^2(alpha/2) as products of sn_K.
  const double d = std::abs(b - c);
  const double num = sn_k(K, 0.5 * (a + d)) * sn_k(K, 0.5 * std::max(0.0, a - d));
  const double den = sn_k(K, 0.5 * (a + b + c)) * sn_k(K, 0.5 * std::max(0.0, b + c - a));
  return 2.0 * std::atan2(std::sqrt(std::max(0.0, num)), std::sqrt(std::max(0.0, den)));
}

double law_of_cosines_side(double K, double b, double c, double alpha) {
  const double h = std::sin(0.5 * alpha);
  double m = md_k(K, std::abs(b - c)) + 2.0 * sn_k(K, b) * sn_k(K, c) * h * h;
  if (K > 0) m = std::min(m, 2.0 / K);
  return inv_md_k(K, std::max(0.0, m));
}

ModelTriangle comparison_triangle(double a, double b, double c, Curvature K) {
  const double k = K.value();
  if (!(a >= 0 && b >= 0 && c >= 0) || !std::isfinite(a + b + c))
    throw DomainError("side lengths must be finite and nonnegative");
  const double slack = 1e-12 * (a + b + c);
  if (a > b + c + slack || b > c + a + slack || c > a + b + slack)
    throw DomainError("side lengths violate the triangle inequality");
  if (k > 0 && a + b + c >= 2.0 * std::numbers::pi / std::sqrt(k))
    throw DomainError("perimeter exceeds 2 pi / sqrt K");
  const double alpha = law_of_cosines_angle(k, a, b, c);
  const double beta = law_of_cosines_angle(k, b, c, a);
  const double gamma = law_of_cosines_angle(k, c, a, b);
  return ModelTriangle{a,
                       b,
                       c,
                       alpha,
                       beta,
                       gamma,
                       K,
                       ModelPoint::origin(K),
                       ModelPoint::polar(K, c, 0.0),
                       ModelPoint::polar(K, b, alpha)};
}

ModelPoint comparison_point(const ModelTriangle& tri, Side side, double t) {
  switch (side) {
    case Side::BC:
      return geodesic_eval(tri.B, tri.C, t);
    case Side::CA:
      return geodesic_eval(tri.C, tri.A, t);
    case Side::AB:
      return geodesic_eval(tri.A, tri.B, t);
  }
  throw DomainError("unknown triangle side");
}

double comparison_distance(double K, double a, double b, double c, double t) {
  if (a == 0.0) return c;
  const double beta = law_of_cosines_angle(K, b, c, a);
  return law_of_cosines_side(K, c, t * a, beta);
}

double four_point_distance(double K, double a, double b, double c, double x1, double x2) {
  if (x1 == 0.0) return c;
  const double beta = law_of_cosines_angle(K, b, c, a);
  const double hinge = law_of_cosines_angle(K, x2, x1, a);
  return law_of_cosines_side(K, c, x1, std::min(std::numbers::pi, beta + hinge));
}

}  // namespace catgeo
