#pragma once

#include <utility>
#include <vector>

namespace catgeo {

// Linear-interpolation quantile (sorted position q (n - 1)). Throws on empty input.
double quantile(std::vector<double> v, double q);
double median(std::vector<double> v);
// Least-squares line y = slope x + intercept; returns {slope, intercept}.
std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace catgeo
