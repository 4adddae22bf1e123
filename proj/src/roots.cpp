#include "catgeo/roots.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "catgeo/errors.hpp"

namespace catgeo {

double find_root(const std::function<double(double, double*)>& f, double lo, double hi,
                 const RootOptions& opts) {
  double dlo = 0.0, dhi = 0.0;
  const double flo = f(lo, &dlo);
  const double fhi = f(hi, &dhi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) throw DomainError("find_root: bracket does not change sign");

  // Orient so that f(xl) < 0 < f(xh).
  double xl = lo, xh = hi;
  if (flo > 0) std::swap(xl, xh);

  double x = 0.5 * (lo + hi);
  double dx_old = std::abs(hi - lo);
  double dx = dx_old;
  double df = 0.0;
  double fx = f(x, &df);
  for (int it = 0; it < opts.max_iter; ++it) {
    const bool newton_out = ((x - xh) * df - fx) * ((x - xl) * df - fx) > 0.0;
    const bool newton_slow = std::abs(2.0 * fx) > std::abs(dx_old * df);
    dx_old = dx;
    if (df == 0.0 || newton_out || newton_slow) {
      dx = 0.5 * (xh - xl);
      x = xl + dx;
    } else {
      dx = fx / df;
      x -= dx;
    }
    if (std::abs(dx) < opts.tol * std::max(1.0, std::abs(x))) return x;
    fx = f(x, &df);
    if (fx == 0.0) return x;
    if (fx < 0.0)
      xl = x;
    else
      xh = x;
  }
  throw ConvergenceError("find_root: iteration cap reached");
}

}  // namespace catgeo
