#include "catgeo/fermi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "catgeo/errors.hpp"

namespace catgeo {

ModelPoint fermi_place(const FermiCoord& c, Curvature K) {
  const double k = K.value();
  if (!(c.d >= 0) || !std::isfinite(c.u) || !std::isfinite(c.d))
    throw DomainError("Fermi distance must be finite and nonnegative");
  if (k > 0) {
    const double q = std::sqrt(k);
    if (c.d >= 0.5 * std::numbers::pi / q || std::abs(c.u) >= std::numbers::pi / q)
      throw DomainError("Fermi coordinates outside the domain for K > 0");
  }
  return ModelPoint::fermi(K, c.u, c.d);
}

EstimateReport fermi_contraction_check(std::span<const FermiPair> pairs,
                                       std::span<const double> source_distances, Curvature K,
                                       double tol, Execution ex) {
  if (pairs.size() != source_distances.size())
    throw DomainError("pairs and source distances differ in length");
  std::vector<double> defects(pairs.size());
  for_each_index(pairs.size(), ex, [&](std::size_t i) {
    const ModelPoint p = fermi_place(pairs[i].first, K);
    const ModelPoint q = fermi_place(pairs[i].second, K);
    defects[i] = distance(p, q) - source_distances[i];
  });

  EstimateReport rep;
  rep.quantity = "fermi_contraction";
  rep.tolerance = tol;
  rep.samples_used = pairs.size();
  rep.value = pairs.empty() ? 0.0 : *std::max_element(defects.begin(), defects.end());
  rep.pass = rep.value <= tol;
  rep.add_extra("K", K.value());
  rep.add_extra("min_defect", pairs.empty() ? 0.0 : *std::min_element(defects.begin(), defects.end()));
  rep.set_diagnostics_top(defects, /*largest=*/true, [&](std::size_t i) {
    return std::vector<double>{pairs[i].first.u, pairs[i].first.d, pairs[i].second.u,
                               pairs[i].second.d};
  });
  return rep;
}

}  // namespace catgeo
