#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "catgeo/model_space.hpp"
#include "catgeo/parallel.hpp"
#include "catgeo/report.hpp"

namespace catgeo {

// Fermi coordinates relative to the base geodesic through the origin of
// S_K along the x1 axis: u is the arclength of the foot point, d >= 0 the
// distance to the base. All images lie on the +x2 side.
struct FermiCoord {
  double u = 0.0;
  double d = 0.0;
};

// Places the point at distance d along the normal leaving the base at u.
// For K > 0 requires d < pi / (2 sqrt K) and |u| < pi / sqrt K.
ModelPoint fermi_place(const FermiCoord& c, Curvature K);

using FermiPair = std::pair<FermiCoord, FermiCoord>;

// Maximum over pairs of d_{S_K}(psi p, psi q) - source_distances[i];
// passes when that maximum is at most tol.
EstimateReport fermi_contraction_check(std::span<const FermiPair> pairs,
                                       std::span<const double> source_distances, Curvature K,
                                       double tol = 1e-9, Execution ex = Execution::parallel);

}  // namespace catgeo
