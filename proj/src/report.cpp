#include "catgeo/report.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "catgeo/json_out.hpp"

namespace catgeo {

void EstimateReport::add_extra(std::string name, double v) { extras.emplace_back(std::move(name), v); }

double EstimateReport::extra(const std::string& name) const {
  for (const auto& [k, v] : extras)
    if (k == name) return v;
  throw std::out_of_range("no report field named " + name);
}

std::vector<std::size_t> top_indices(const std::vector<double>& values, std::size_t k, bool largest) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  k = std::min(k, idx.size());
  auto before = [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return largest ? values[a] > values[b] : values[a] < values[b];
    return a < b;
  };
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(), before);
  idx.resize(k);
  return idx;
}

void EstimateReport::set_diagnostics_top(const std::vector<double>& values, bool largest,
                                         const std::function<std::vector<double>(std::size_t)>& data,
                                         const std::function<std::vector<std::size_t>(std::size_t)>& ids,
                                         std::size_t max_items) {
  diagnostics.clear();
  for (std::size_t i : top_indices(values, max_items, largest)) {
    Diagnostic d;
    d.ids = ids ? ids(i) : std::vector<std::size_t>{i};
    d.defect = values[i];
    if (data) d.data = data(i);
    diagnostics.push_back(std::move(d));
  }
}

std::string to_json(const EstimateReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("quantity").value(r.quantity);
  w.key("value").value(r.value);
  w.key("tolerance").value(r.tolerance);
  w.key("pass").value(r.pass);
  w.key("seed").value(r.seed);
  w.key("n").value(static_cast<std::uint64_t>(r.n));
  w.key("samples_used").value(static_cast<std::uint64_t>(r.samples_used));
  w.key("extra").begin_object();
  for (const auto& [k, v] : r.extras) w.key(k).value(v);
  w.end_object();
  w.key("diagnostics").begin_array();
  for (const auto& d : r.diagnostics) {
    w.begin_object();
    w.key("ids").begin_array();
    for (std::size_t id : d.ids) w.value(static_cast<std::uint64_t>(id));
    w.end_array();
    w.key("defect").value(d.defect);
    if (!d.data.empty()) w.key("data").value(d.data);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

}  // namespace catgeo
