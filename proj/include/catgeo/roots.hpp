#pragma once

#include <functional>

namespace catgeo {

struct RootOptions {
  double tol = 1e-12;
  int max_iter = 200;
};

// Safeguarded Newton iteration on a sign-changing bracket [lo, hi]. Steps
// that leave the bracket or fail to halve the previous step fall back to
// bisection. f returns the value and writes the derivative to *df.
// Throws DomainError if f(lo) and f(hi) have the same sign and
// ConvergenceError when max_iter is exhausted.
double find_root(const std::function<double(double, double*)>& f, double lo, double hi,
                 const RootOptions& opts = {});

}  // namespace catgeo
