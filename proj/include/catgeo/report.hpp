#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace catgeo {

struct Diagnostic {
  std::vector<std::size_t> ids;  // sample indices (pair, triple, ...) or item index
  double defect = 0.0;
  std::vector<double> data;  // item-specific context
};

struct EstimateReport {
  std::string quantity;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;  // number of sample points, 0 when not applicable
  std::vector<Diagnostic> diagnostics;
  // Named secondary values, kept in insertion order.
  std::vector<std::pair<std::string, double>> extras;

  void add_extra(std::string name, double v);
  // Throws std::out_of_range for unknown names.
  double extra(const std::string& name) const;

  // Keeps the max_items most extreme entries of values (largest or smallest
  // first, ties toward the lower index) as diagnostics.
  void set_diagnostics_top(const std::vector<double>& values, bool largest,
                           const std::function<std::vector<double>(std::size_t)>& data = {},
                           const std::function<std::vector<std::size_t>(std::size_t)>& ids = {},
                           std::size_t max_items = 20);
};

// Indices of the k most extreme values, ties broken toward the lower index.
std::vector<std::size_t> top_indices(const std::vector<double>& values, std::size_t k, bool largest);

std::string to_json(const EstimateReport& r);

}  // namespace catgeo
