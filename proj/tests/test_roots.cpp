#include <gtest/gtest.h>

#include <cmath>

#include "catgeo/errors.hpp"
#include "catgeo/roots.hpp"

using namespace catgeo;

TEST(Roots, FindsCubeRoot) {
  const double r = find_root(
      [](double x, double* df) {
        if (df) *df = 3 * x * x;
        return x * x * x - 2;
      },
      0.0, 2.0);
  EXPECT_NEAR(r, std::cbrt(2.0), 1e-12);
}

TEST(Roots, SurvivesBadDerivative) {
  // A wrong derivative must only slow convergence, not break the bracket.
  const double r = find_root(
      [](double x, double* df) {
        if (df) *df = 1e-9;
        return std::cos(x) - x;
      },
      0.0, 1.0);
  EXPECT_NEAR(r, 0.7390851332151607, 1e-11);
}

TEST(Roots, RejectsBracketWithoutSignChange) {
  EXPECT_THROW(find_root(
                   [](double x, double* df) {
                     if (df) *df = 2 * x;
                     return x * x + 1;
                   },
                   -1.0, 1.0),
               DomainError);
}

TEST(Roots, EndpointRootIsReturned) {
  const double r = find_root(
      [](double x, double* df) {
        if (df) *df = 1;
        return x - 1;
      },
      1.0, 3.0);
  EXPECT_DOUBLE_EQ(r, 1.0);
}
