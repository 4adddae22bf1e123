#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "catgeo/parallel.hpp"

namespace catgeo {

// Ambient metric on point coordinates. Spheres and hyperboloids are given
// by their radius R in R^dim (Minkowski signature (+,-,...,-) for the
// hyperboloid); the ambient curvature is 0, 1/R^2 or -1/R^2.
struct Ambient {
  enum class Kind { euclidean, sphere, hyperboloid };
  Kind kind = Kind::euclidean;
  double radius = 1.0;

  double curvature() const;
  double distance(std::span<const double> a, std::span<const double> b) const;
};

// Row-major flat point storage.
struct PointCloud {
  std::size_t dim = 0;
  std::vector<double> coords;

  std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
  std::span<const double> operator[](std::size_t i) const { return {coords.data() + i * dim, dim}; }
  void push_back(std::initializer_list<double> p);
  void push_back(std::span<const double> p);
};

// Decides whether the edge (i, j) stays inside the sampled subspace.
using EdgeFilter = std::function<bool(std::size_t, std::size_t)>;

struct BuildOptions {
  double eps = 0.0;
  EdgeFilter edge_filter;  // empty: every pair within eps is an edge
  Execution execution = Execution::parallel;
};

class SampledSpace {
 public:
  // Graph built from an explicit ambient metric on the points.
  static SampledSpace build(PointCloud points, const Ambient& ambient, const BuildOptions& opts);
  // Graph built from a precomputed symmetric distance matrix (row-major).
  static SampledSpace build_from_matrix(std::vector<double> matrix, std::size_t n,
                                        const BuildOptions& opts, PointCloud points = {});

  std::size_t size() const { return n_; }
  double eps() const { return eps_; }
  // Largest nearest-neighbor ambient distance.
  double mesh() const { return mesh_; }
  std::size_t edge_count() const { return edge_count_; }
  bool has_ambient_model() const { return has_model_; }
  // Curvature of the ambient model; NaN for matrix input.
  double ambient_curvature() const;
  const Ambient& ambient_model() const { return ambient_model_; }
  const PointCloud& points() const { return points_; }

  double ambient(std::size_t i, std::size_t j) const { return ambient_[i * n_ + j]; }
  double intrinsic(std::size_t i, std::size_t j) const { return intrinsic_[i * n_ + j]; }
  std::span<const double> intrinsic_row(std::size_t i) const { return {intrinsic_.data() + i * n_, n_}; }
  const std::vector<double>& ambient_matrix() const { return ambient_; }
  const std::vector<double>& intrinsic_matrix() const { return intrinsic_; }

  double ambient_diameter() const;
  double intrinsic_diameter() const;

  // Shortest path from i to j as a vertex sequence starting at i.
  std::vector<std::size_t> discrete_geodesic(std::size_t i, std::size_t j) const;
  // Sum of ambient edge lengths along a vertex chain.
  double path_length(std::span<const std::size_t> path) const;
  // Vertex whose cumulative length is nearest t times the path length;
  // ties go to the earlier vertex.
  std::size_t path_point(std::span<const std::size_t> path, double t) const;

  // Provenance kept for export: scenario name (or "matrix"), parameters, seed.
  std::string label = "matrix";
  std::vector<std::pair<std::string, double>> params;
  std::uint64_t seed = 0;

 private:
  void finish(const BuildOptions& opts);

  std::size_t n_ = 0;
  double eps_ = 0.0;
  double mesh_ = 0.0;
  std::size_t edge_count_ = 0;
  bool has_model_ = false;
  Ambient ambient_model_;
  PointCloud points_;
  std::vector<double> ambient_;
  std::vector<double> intrinsic_;
  std::vector<std::int32_t> pred_;
};

// Compressed adjacency of the eps-graph.
struct Graph {
  std::vector<std::size_t> offsets;
  std::vector<std::int32_t> targets;
  std::vector<double> weights;
  std::size_t size() const { return offsets.empty() ? 0 : offsets.size() - 1; }
};

// All-pairs shortest paths by one Dijkstra run per source. dist and pred
// are n x n row-major; pred[s * n + v] is the vertex before v on the path
// from s, or -1.
void all_pairs_shortest_paths(const Graph& g, std::vector<double>& dist, std::vector<std::int32_t>& pred,
                              Execution ex);

// Largest nearest-neighbor distance for a row-major distance matrix.
double mesh_of(const std::vector<double>& matrix, std::size_t n);

// Serialization of a sampled space in the export schema
// {ambient, params, eps, seed, n, dim, points[, matrix]}.
std::string to_json(const SampledSpace& space);

}  // namespace catgeo
