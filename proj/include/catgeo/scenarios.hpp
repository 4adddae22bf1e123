#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catgeo/parallel.hpp"
#include "catgeo/sampled.hpp"

namespace catgeo {

enum class MeshPolicy { scenario_default, grid, quasi_random, random };

struct ScenarioSpec {
  std::string name;
  std::vector<std::pair<std::string, double>> params;  // R, H, rho, L, ...
  std::size_t n = 0;
  std::uint64_t seed = 0;
  MeshPolicy mesh = MeshPolicy::scenario_default;
  // Graph scale: eps if positive, otherwise eps_factor times the mesh.
  double eps = 0.0;
  double eps_factor = 5.0;

  double param(std::string_view key, double fallback) const;
  void set(std::string key, double value);
};

// What is known about a scenario in closed form. NaN marks "not applicable".
struct GroundTruth {
  double ambient_K = 0.0;
  double A = 0.0;                  // extrinsic curvature of the subspace
  double cba = 0.0;                // intrinsic curvature bound (exact or upper bound)
  bool cba_is_upper_bound = false;
  double injectivity = 0.0;        // injectivity radius (exact or lower bound)
  bool injectivity_is_lower_bound = false;
  double closed_geodesic_length = 0.0;  // shortest closed geodesic, NaN if none known
  std::string provenance;
};

struct Scenario {
  ScenarioSpec spec;
  SampledSpace space;
  GroundTruth truth;
  // Ordered vertex loops with known geometry (band boundaries).
  std::vector<std::vector<std::size_t>> loops;
};

const std::vector<std::string>& scenario_names();

// Truth record and parameter validation without sampling.
GroundTruth scenario_truth(const ScenarioSpec& spec);

Scenario generate(const ScenarioSpec& spec, Execution ex = Execution::parallel);

// Rebuilds a sampled space from the export schema written by to_json.
SampledSpace import_space(const std::string& json_text, Execution ex = Execution::parallel);

// Distance on S^2 from the unit vector x to the equatorial arc
// {lon in [0, L]} (L = 2 pi: the whole equator).
double distance_to_equator_arc(std::span<const double> x, double L);

}  // namespace catgeo
