#include "catgeo/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "catgeo/errors.hpp"
#include "catgeo/estimate.hpp"
#include "catgeo/fermi.hpp"
#include "catgeo/json_out.hpp"
#include "catgeo/kcurve.hpp"
#include "catgeo/scenarios.hpp"

namespace catgeo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("invalid number '" + s + "'");
  }
  if (used != s.size()) throw DomainError("invalid number '" + s + "'");
  return v;
}

// Flags shared by all subcommands. Range-capable flags stay strings until
// the command decides whether it accepts a range.
struct Config {
  std::string what;
  std::optional<std::string> K, k, s, r, d, A, rho, L, R, H;
  std::optional<std::size_t> n;
  std::uint64_t seed = 0;
  std::optional<double> eps, rmax, tol;
  std::optional<std::size_t> triangles;
  std::string scenario;
  std::string spec_file;
  std::string input;
  std::string out;
  std::string format = "json";
};

double single(const std::optional<std::string>& v, double fallback, const char* name) {
  if (!v) return fallback;
  const auto vals = parse_range(*v);
  if (vals.size() != 1) throw DomainError(std::string("--") + name + " takes a single value here");
  return vals[0];
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--K", c.K, "ambient curvature (range lo:hi:step in tables)");
  sub->add_option("--k", c.k, "geodesic curvature of the k-curve (range in tables)");
  sub->add_option("--s", c.s, "arclength (range in tables)");
  sub->add_option("--r", c.r, "chord length");
  sub->add_option("--d", c.d, "distance to the curve (range in tables)");
  sub->add_option("--A", c.A, "extrinsic curvature bound");
  sub->add_option("--rho", c.rho, "tube or band radius");
  sub->add_option("--L", c.L, "tube core length");
  sub->add_option("--R", c.R, "scenario radius");
  sub->add_option("--H", c.H, "cylinder height");
  sub->add_option("--n", c.n, "sample count");
  sub->add_option("--seed", c.seed, "random seed (default 0)");
  sub->add_option("--eps", c.eps, "graph scale (default 5 x mesh)");
  sub->add_option("--rmax", c.rmax, "largest chord used by the extrinsic estimate");
  sub->add_option("--tol", c.tol, "absolute tolerance override for the pass test");
  sub->add_option("--triangles", c.triangles, "number of sampled triangles");
  sub->add_option("--scenario", c.scenario, "scenario name");
  sub->add_option("--spec", c.spec_file, "scenario spec JSON {name, params, n, seed, eps}");
  sub->add_option("--input", c.input, "exported point cloud to use instead of a generated scenario");
  sub->add_option("--out", c.out, "output file (default stdout)");
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScenarioSpec make_spec(const Config& c, const std::string& default_name, std::size_t default_n) {
  ScenarioSpec spec;
  spec.name = default_name;
  spec.n = default_n;
  spec.seed = c.seed;
  if (!c.spec_file.empty()) {
    const auto j = nlohmann::json::parse(read_file(c.spec_file));
    spec.name = j.value("name", spec.name);
    if (j.contains("params"))
      for (const auto& [key, v] : j.at("params").items()) spec.set(key, v.get<double>());
    spec.n = j.value("n", spec.n);
    spec.seed = j.value("seed", spec.seed);
    spec.eps = j.value("eps", spec.eps);
    spec.eps_factor = j.value("eps_factor", spec.eps_factor);
  }
  if (!c.scenario.empty()) spec.name = c.scenario;
  if (c.n) spec.n = *c.n;
  if (c.eps) spec.eps = *c.eps;
  const std::pair<const char*, const std::optional<std::string>*> params[] = {
      {"R", &c.R}, {"H", &c.H}, {"rho", &c.rho}, {"L", &c.L}};
  for (const auto& [name, v] : params)
    if (*v) spec.set(name, single(*v, 0.0, name));
  return spec;
}

Scenario load_scenario(const Config& c, const std::string& default_name, std::size_t default_n) {
  if (c.input.empty()) return generate(make_spec(c, default_name, default_n));
  Scenario sc;
  sc.space = import_space(read_file(c.input));
  sc.spec.name = sc.space.label;
  sc.spec.params = sc.space.params;
  sc.spec.n = sc.space.size();
  sc.spec.seed = sc.space.seed;
  if (sc.space.label == "matrix") throw DomainError("imported matrix spaces carry no ground truth");
  sc.truth = scenario_truth(sc.spec);
  return sc;
}

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Evaluates f, mapping domain errors to NaN cells.
double guarded(const std::function<double()>& f) {
  try {
    return f();
  } catch (const DomainError&) {
    return kNaN;
  }
}

Table make_table(const Config& c) {
  const auto Ks = parse_range(c.K.value_or("0"));
  const auto ks = parse_range(c.k.value_or("1"));
  Table t;
  t.name = c.what;
  if (c.what == "circumference") {
    t.columns = {"K", "k", "exact", "closed_form", "difference"};
    for (double K : Ks)
      for (double k : ks) {
        const double exact = guarded([&] { return KCurve(K, k).circumference(); });
        const double cf = K + k * k > 0 ? 2 * kPi / std::sqrt(K + k * k) : kInf;
        t.rows.push_back({K, k, exact, cf, exact == cf ? 0.0 : exact - cf});
      }
    return t;
  }
  const bool lipschitz = c.what == "lipschitz";
  const auto xs = parse_range(lipschitz ? c.d.value_or("0:0.2") : c.s.value_or("0.01:0.5"));
  if (c.what == "arcchord")
    t.columns = {"K", "k", "s", "exact", "series", "difference", "defect"};
  else if (c.what == "width")
    t.columns = {"K", "k", "s", "r", "exact", "series", "difference", "ratio"};
  else if (c.what == "baseangle")
    t.columns = {"K", "k", "s", "exact", "series", "difference", "ratio"};
  else
    t.columns = {"K", "k", "d", "exact", "series", "difference"};
  for (double K : Ks)
    for (double k : ks)
      for (double x : xs) {
        if (c.what == "arcchord") {
          const double r = guarded([&] { return arc_to_chord(K, k, x); });
          const double ser = x - k * k * x * x * x / 24;
          t.rows.push_back({K, k, x, r, ser, r - ser, (x - r) / (x * x * x)});
        } else if (c.what == "width") {
          const double r = guarded([&] { return arc_to_chord(K, k, x); });
          const double w = guarded([&] { return width(K, k, x); });
          const double ser = k * r * r / 8;
          t.rows.push_back({K, k, x, r, w, ser, w - ser, w / (r * r)});
        } else if (c.what == "baseangle") {
          const double phi = guarded([&] { return base_angle(K, k, x); });
          const double ser = k * x / 2;
          t.rows.push_back({K, k, x, phi, ser, phi - ser, phi / x});
        } else {
          const double q = guarded([&] { return projection_lipschitz_ratio(K, k, x); });
          const double ser = 1 + k * x + (k * k + K / 2) * x * x;
          t.rows.push_back({K, k, x, q, ser, q - ser});
        }
      }
  return t;
}

std::string render(const Table& t, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
      os << "\n";
    }
    return os.str();
  }
  JsonWriter w;
  w.begin_object();
  w.key("table").value(t.name);
  w.key("columns").begin_array();
  for (const auto& col : t.columns) w.value(col);
  w.end_array();
  w.key("rows").begin_array();
  for (const auto& row : t.rows) w.value(row);
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

std::string render(const EstimateReport& rep, const std::string& format) {
  if (format == "json") return to_json(rep);
  std::ostringstream os;
  os << "quantity,value,tolerance,pass,seed,n,samples_used";
  for (const auto& [k, v] : rep.extras) os << "," << k;
  os << "\n"
     << rep.quantity << "," << format_double(rep.value) << "," << format_double(rep.tolerance) << ","
     << (rep.pass ? "true" : "false") << "," << rep.seed << "," << rep.n << "," << rep.samples_used;
  for (const auto& [k, v] : rep.extras) os << "," << format_double(v);
  os << "\n";
  return os.str();
}

EstimateReport verify_fermi(const Config& c) {
  const double K = single(c.K, 1.0, "K");
  const std::size_t n = c.n.value_or(10000);
  // Rectangle kept well inside the Fermi chart of both curvatures.
  const double scale = K > 0 ? std::min(1.0, 0.4 * kPi / std::sqrt(K)) : 1.0;
  const double umax = scale, dmax = 0.5 * scale;
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> U(-umax, umax), D(0.0, dmax);
  std::vector<FermiPair> pairs(n);
  std::vector<double> src(n);
  const Curvature Ks(K - 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const FermiCoord a{U(rng), D(rng)};
    const FermiCoord b{U(rng), D(rng)};
    pairs[i] = {a, b};
    src[i] = distance(fermi_place(a, Ks), fermi_place(b, Ks));
  }
  EstimateReport rep = fermi_contraction_check(pairs, src, Curvature(K), c.tol.value_or(1e-9));
  rep.seed = c.seed;
  return rep;
}

EstimateReport verify_projbound(const Config& c) {
  const double K = single(c.K, 0.0, "K");
  const double k = single(c.k, 1.0, "k");
  const double s = single(c.s, 1.0, "s");
  const double rho = single(c.rho, kInf, "rho");
  // The chord of a k-arc: a curve on the concave side of the arc.
  const KCurve N(K, k);
  const ModelPoint a = N.point_at(-s / 2), b = N.point_at(s / 2);
  std::vector<ModelPoint> curve;
  constexpr int kSamples = 400;
  for (int i = 0; i <= kSamples; ++i) curve.push_back(geodesic_eval(a, b, static_cast<double>(i) / kSamples));
  EstimateReport rep = projection_length_bound_check(K, k, rho, curve);
  if (c.tol) {
    rep.tolerance = *c.tol;
    rep.pass = rep.value <= rep.extra("bound") + *c.tol;
  }
  return rep;
}

EstimateReport run_verify(const Config& c) {
  const std::string& w = c.what;
  if (w == "inj") {
    const double K = single(c.K, 0.0, "K");
    const double A = single(c.A, 1.0, "A");
    EstimateReport rep;
    rep.quantity = "injectivity_lower_bound";
    rep.value = injectivity_lower_bound(K, A);
    rep.pass = true;
    const double k2 = K + A * A;
    rep.add_extra("pi_over_sqrt", k2 > 0 ? kPi / std::sqrt(k2) : kInf);
    rep.add_extra("half_circumference", 0.5 * circumference(A, K));
    return rep;
  }
  if (w == "fermi") return verify_fermi(c);
  if (w == "projbound") return verify_projbound(c);
  if (w == "tube") {
    ExtrinsicOptions eo;
    if (c.rmax) eo.r_max = *c.rmax;
    const double rho = single(c.rho, kPi / 6, "rho");
    EstimateReport rep =
        tube_curvature_verify(rho, single(c.L, 2.0, "L"), c.n.value_or(3000), c.seed, eo,
                              c.tol ? *c.tol / std::tan(rho) : 0.1);
    return rep;
  }
  if (w == "gauss") {
    const Scenario sc = load_scenario(c, "sphere_E3", 2000);
    GaussOptions go;
    go.cat.seed = c.seed;
    if (c.rmax) go.extrinsic.r_max = *c.rmax;
    if (c.triangles) go.cat.triangles = *c.triangles;
    if (c.tol) {
      go.tol_rel = 0.0;
      go.tol_floor = *c.tol;
    }
    return gauss_verify(sc, go);
  }
  if (w == "fan") {
    const Scenario sc = load_scenario(c, "sphere_E3", 2000);
    FanOptions fo;
    fo.seed = c.seed;
    const double A = single(c.A, sc.truth.A, "A");
    EstimateReport rep = fan_convexity_survey(sc.space, sc.truth.ambient_K, A, fo);
    return rep;
  }
  if (w == "closedcurve") {
    const Scenario sc = load_scenario(c, "band_S2", 2000);
    if (sc.loops.empty()) throw DomainError("scenario '" + sc.spec.name + "' has no closed loops");
    double A;
    if (c.A) {
      A = single(c.A, 0.0, "A");
    } else {
      ExtrinsicOptions eo;
      if (c.rmax) eo.r_max = *c.rmax;
      A = extrinsic_curvature_estimate(sc.space, eo).value;
    }
    LoopOptions lo;
    if (c.tol) lo.length_tol = *c.tol;
    EstimateReport rep = closed_geodesic_check(sc.space, sc.loops.front(), A, sc.truth.ambient_K, lo);
    rep.seed = sc.spec.seed;
    return rep;
  }
  throw DomainError("unknown check '" + w + "'");
}

void emit(const std::string& text, const Config& c, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw DomainError("cannot write " + c.out);
  f << text;
}

}  // namespace

std::vector<double> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (!text.empty() && text.back() == ':') parts.emplace_back();
  if (parts.empty() || parts.size() > 3) throw DomainError("invalid range '" + text + "'");
  const double lo = parse_number(parts[0]);
  if (parts.size() == 1) return {lo};
  const double hi = parse_number(parts[1]);
  const double step = parts.size() == 3 ? parse_number(parts[2]) : (hi - lo) / 10.0;
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("range bounds must be finite");
  if (hi < lo) throw DomainError("empty range '" + text + "'");
  if (hi == lo) return {lo};
  if (!(step > 0)) throw DomainError("range step must be positive");
  std::vector<double> v;
  for (std::size_t i = 0;; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    if (x >= hi + step / 2) break;
    v.push_back(x);
    if (v.size() > 1000000) throw DomainError("range too long");
  }
  return v;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  apply_thread_cap_from_env();
  CLI::App app{"Comparison-geometry toolkit: k-curve tables, curvature checks, scenario export"};
  app.require_subcommand(1);
  Config c;

  auto* table = app.add_subcommand("table", "k-curve formula grids with exact, series and difference columns");
  table->add_option("quantity", c.what, "circumference | arcchord | width | baseangle | lipschitz")
      ->required()
      ->check(CLI::IsMember({"circumference", "arcchord", "width", "baseangle", "lipschitz"}));
  add_common(table, c);
  table->footer(
      "Ranges: lo:hi:step covers lo, lo+step, ... while below hi + step/2; lo:hi uses ten steps; a single "
      "value is a one-point range. Cells outside a formula's domain are nan; infinite circumferences are inf.");

  auto* verify = app.add_subcommand("verify", "run an estimator and emit its report; exit 0 iff it passes");
  verify->add_option("check", c.what, "gauss | inj | closedcurve | tube | fan | fermi | projbound")
      ->required()
      ->check(CLI::IsMember({"gauss", "inj", "closedcurve", "tube", "fan", "fermi", "projbound"}));
  add_common(verify, c);

  auto* exp = app.add_subcommand("export", "write a scenario point cloud and its metric data as JSON");
  add_common(exp, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) {
      emit(render(make_table(c), c.format), c, out);
      return 0;
    }
    if (exp->parsed()) {
      if (c.format != "json") throw DomainError("export writes JSON only");
      const Scenario sc = generate(make_spec(c, "sphere_E3", 2000));
      emit(to_json(sc.space), c, out);
      return 0;
    }
    const EstimateReport rep = run_verify(c);
    emit(render(rep, c.format), c, out);
    return rep.pass ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace catgeo
