#include "catgeo/sampled.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <random>

#include "catgeo/errors.hpp"
#include "catgeo/json_out.hpp"

namespace catgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_metric(const std::vector<double>& m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i * n + i] != 0.0) throw ConstructionError("non-metric input: nonzero self distance");
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = m[i * n + j], b = m[j * n + i];
      if (!std::isfinite(a) || a < 0) throw ConstructionError("non-metric input: bad distance value");
      if (std::abs(a - b) > 1e-12 * std::max(1.0, a)) throw ConstructionError("non-metric input: asymmetric");
    }
  }
  // Triangle inequality on a fixed pseudo-random sample of triples.
  std::mt19937_64 rng(0x5eedULL);
  const std::size_t trials = std::min<std::size_t>(20000, n * n * n);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t i = rng() % n, j = rng() % n, k = rng() % n;
    const double ik = m[i * n + k], ij = m[i * n + j], jk = m[j * n + k];
    if (ik > ij + jk + 1e-9 * std::max(1.0, ik)) throw ConstructionError("non-metric input: triangle inequality");
  }
}

}  // namespace

double Ambient::curvature() const {
  switch (kind) {
    case Kind::euclidean:
      return 0.0;
    case Kind::sphere:
      return 1.0 / (radius * radius);
    case Kind::hyperboloid:
      return -1.0 / (radius * radius);
  }
  return 0.0;
}

double Ambient::distance(std::span<const double> a, std::span<const double> b) const {
  switch (kind) {
    case Kind::euclidean: {
      double s = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
      return std::sqrt(s);
    }
    case Kind::sphere: {
      // Half-chord arcsine, switching to the antipodal chord near pi.
      double dm = 0.0, dp = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        dm += (a[i] - b[i]) * (a[i] - b[i]);
        dp += (a[i] + b[i]) * (a[i] + b[i]);
      }
      const double hm = std::sqrt(dm) / (2.0 * radius);
      if (hm < 0.7) return 2.0 * radius * std::asin(hm);
      const double hp = std::min(1.0, std::sqrt(dp) / (2.0 * radius));
      return radius * (std::numbers::pi - 2.0 * std::asin(hp));
    }
    case Kind::hyperboloid: {
      double s = -(a[0] - b[0]) * (a[0] - b[0]);
      for (std::size_t i = 1; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
      return 2.0 * radius * std::asinh(std::sqrt(std::max(0.0, s)) / (2.0 * radius));
    }
  }
  return 0.0;
}

void PointCloud::push_back(std::initializer_list<double> p) {
  if (dim == 0) dim = p.size();
  if (p.size() != dim) throw DomainError("point dimension mismatch");
  coords.insert(coords.end(), p.begin(), p.end());
}

void PointCloud::push_back(std::span<const double> p) {
  if (dim == 0) dim = p.size();
  if (p.size() != dim) throw DomainError("point dimension mismatch");
  coords.insert(coords.end(), p.begin(), p.end());
}

double mesh_of(const std::vector<double>& matrix, std::size_t n) {
  double mesh = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double nearest = kInf;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) nearest = std::min(nearest, matrix[i * n + j]);
    mesh = std::max(mesh, nearest);
  }
  return mesh;
}

void all_pairs_shortest_paths(const Graph& g, std::vector<double>& dist, std::vector<std::int32_t>& pred,
                              Execution ex) {
  const std::size_t n = g.size();
  dist.assign(n * n, kInf);
  pred.assign(n * n, -1);
  for_each_index(n, ex, [&](std::size_t src) {
    double* d = dist.data() + src * n;
    std::int32_t* p = pred.data() + src * n;
    using Item = std::pair<double, std::int32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    d[src] = 0.0;
    heap.emplace(0.0, static_cast<std::int32_t>(src));
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (du > d[u]) continue;
      for (std::size_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
        const std::int32_t v = g.targets[e];
        const double nd = du + g.weights[e];
        if (nd < d[v]) {
          d[v] = nd;
          p[v] = u;
          heap.emplace(nd, v);
        }
      }
    }
  });
}

SampledSpace SampledSpace::build(PointCloud points, const Ambient& ambient, const BuildOptions& opts) {
  const std::size_t n = points.size();
  if (n < 2) throw ConstructionError("a sampled space needs at least two points");
  std::vector<double> m(n * n, 0.0);
  for_each_index(n, opts.execution, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) m[i * n + j] = ambient.distance(points[std::min(i, j)], points[std::max(i, j)]);
  });
  SampledSpace s;
  s.n_ = n;
  s.points_ = std::move(points);
  s.ambient_ = std::move(m);
  s.has_model_ = true;
  s.ambient_model_ = ambient;
  s.label = "model";
  s.finish(opts);
  return s;
}

SampledSpace SampledSpace::build_from_matrix(std::vector<double> matrix, std::size_t n,
                                             const BuildOptions& opts, PointCloud points) {
  if (n < 2) throw ConstructionError("a sampled space needs at least two points");
  if (matrix.size() != n * n) throw ConstructionError("distance matrix has the wrong size");
  if (points.size() != 0 && points.size() != n) throw ConstructionError("point count differs from matrix size");
  SampledSpace s;
  s.n_ = n;
  s.points_ = std::move(points);
  s.ambient_ = std::move(matrix);
  s.label = "matrix";
  s.finish(opts);
  return s;
}

void SampledSpace::finish(const BuildOptions& opts) {
  if (!(opts.eps > 0) || !std::isfinite(opts.eps)) throw ConstructionError("graph eps must be positive");
  check_metric(ambient_, n_);
  eps_ = opts.eps;
  mesh_ = mesh_of(ambient_, n_);

  Graph g;
  g.offsets.assign(n_ + 1, 0);
  std::vector<std::vector<std::int32_t>> nbrs(n_);
  for_each_index(n_, opts.execution, [&](std::size_t i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == i || ambient_[i * n_ + j] > eps_) continue;
      if (opts.edge_filter && !opts.edge_filter(std::min(i, j), std::max(i, j))) continue;
      nbrs[i].push_back(static_cast<std::int32_t>(j));
    }
  });
  for (std::size_t i = 0; i < n_; ++i) {
    g.offsets[i + 1] = g.offsets[i] + nbrs[i].size();
    for (std::int32_t j : nbrs[i]) {
      g.targets.push_back(j);
      g.weights.push_back(ambient_[i * n_ + static_cast<std::size_t>(j)]);
    }
  }
  edge_count_ = g.targets.size() / 2;

  all_pairs_shortest_paths(g, intrinsic_, pred_, opts.execution);
  for (std::size_t j = 0; j < n_; ++j)
    if (std::isinf(intrinsic_[j])) throw ConstructionError("graph is disconnected at the chosen eps");
  // Paths can only lengthen; remove rounding-level violations.
  for (std::size_t k = 0; k < n_ * n_; ++k) intrinsic_[k] = std::max(intrinsic_[k], ambient_[k]);
}

double SampledSpace::ambient_curvature() const {
  return has_model_ ? ambient_model_.curvature() : std::numeric_limits<double>::quiet_NaN();
}

double SampledSpace::ambient_diameter() const { return *std::max_element(ambient_.begin(), ambient_.end()); }

double SampledSpace::intrinsic_diameter() const {
  return *std::max_element(intrinsic_.begin(), intrinsic_.end());
}

std::vector<std::size_t> SampledSpace::discrete_geodesic(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DomainError("vertex index out of range");
  std::vector<std::size_t> path{j};
  std::size_t v = j;
  while (v != i) {
    const std::int32_t p = pred_[i * n_ + v];
    if (p < 0) throw ConstructionError("missing predecessor");
    v = static_cast<std::size_t>(p);
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

double SampledSpace::path_length(std::span<const std::size_t> path) const {
  double len = 0.0;
  for (std::size_t k = 1; k < path.size(); ++k) len += ambient(path[k - 1], path[k]);
  return len;
}

std::size_t SampledSpace::path_point(std::span<const std::size_t> path, double t) const {
  if (path.empty()) throw DomainError("empty path");
  const double target = t * path_length(path);
  std::size_t best = 0;
  double best_gap = std::abs(target);
  double cum = 0.0;
  for (std::size_t k = 1; k < path.size(); ++k) {
    cum += ambient(path[k - 1], path[k]);
    const double gap = std::abs(cum - target);
    if (gap < best_gap) {
      best_gap = gap;
      best = k;
    }
  }
  return path[best];
}

std::string to_json(const SampledSpace& space) {
  JsonWriter w;
  w.begin_object();
  w.key("ambient").value(space.label);
  w.key("params").begin_object();
  for (const auto& [k, v] : space.params) w.key(k).value(v);
  w.end_object();
  w.key("eps").value(space.eps());
  w.key("seed").value(space.seed);
  w.key("n").value(static_cast<std::uint64_t>(space.size()));
  w.key("dim").value(static_cast<std::uint64_t>(space.points().dim));
  w.key("mesh").value(space.mesh());
  w.key("points").begin_array();
  const PointCloud& pts = space.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto p = pts[i];
    w.value(std::vector<double>(p.begin(), p.end()));
  }
  w.end_array();
  if (space.label == "matrix") {
    w.key("matrix").begin_array();
    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& m = space.ambient_matrix();
      w.value(std::vector<double>(m.begin() + static_cast<std::ptrdiff_t>(i * n),
                                  m.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
    }
    w.end_array();
  }
  w.end_object();
  return w.str() + "\n";
}

}  // namespace catgeo
