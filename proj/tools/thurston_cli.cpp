#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thurston/thurston.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitDomain = 2;
constexpr int kExitDegenerate = 3;

// Error raised by a C API call, carrying its status.
struct ApiFailure : std::runtime_error {
  thurston_status status;
  ApiFailure(thurston_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

// Input that cannot be parsed or is out of range.
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(thurston_status s) {
  if (s != THURSTON_OK) throw ApiFailure(s, thurston_last_error());
}

int exit_code_for(thurston_status s) {
  switch (s) {
    case THURSTON_OK: return kExitOk;
    case THURSTON_ERR_DOMAIN:
    case THURSTON_ERR_PRECONDITION:
    case THURSTON_ERR_NULL_ARGUMENT: return kExitDomain;
    case THURSTON_ERR_DEGENERATE: return kExitDegenerate;
    default: return kExitCheck;
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Curve = std::unique_ptr<thurston_curve, Deleter<thurston_curve, thurston_curve_free>>;
using Triangle = std::unique_ptr<thurston_triangle, Deleter<thurston_triangle, thurston_triangle_free>>;
using Sweep = std::unique_ptr<thurston_sweep, Deleter<thurston_sweep, thurston_sweep_free>>;
using TableReport =
    std::unique_ptr<thurston_table_report, Deleter<thurston_table_report, thurston_table_report_free>>;
using VerifyReport =
    std::unique_ptr<thurston_verify_report, Deleter<thurston_verify_report, thurston_verify_report_free>>;
using String = std::unique_ptr<thurston_string, Deleter<thurston_string, thurston_string_free>>;

enum class Format { Table, Csv, Json };

struct Common {
  std::string geometry = "s2r";
  std::string format = "table";
  std::optional<int> precision;

  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "json") return Format::Json;
    return Format::Table;
  }

  thurston_geometry kind() const { return geometry == "h2r" ? THURSTON_H2R : THURSTON_S2R; }

  // --precision, then THURSTON_PRECISION, then 6.
  int digits() const {
    if (precision) return *precision;
    if (const char* env = std::getenv("THURSTON_PRECISION"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (*end != '\0' || v < 0 || v > 17) throw UsageFailure("THURSTON_PRECISION must be an integer in [0, 17]");
      return static_cast<int>(v);
    }
    return 6;
  }
};

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0' || !std::isfinite(v)) {
      throw UsageFailure(what + ": cannot parse '" + item + "' as a number");
    }
    out.push_back(v);
  }
  return out;
}

// "x,y,z" or "x0,x,y,z"; the homogeneous form is normalized to x0 = 1.
thurston_point parse_point(const std::string& text, const std::string& what) {
  const std::vector<double> v = parse_list(text, what);
  if (v.size() == 3) return {v[0], v[1], v[2]};
  if (v.size() == 4) {
    if (!(v[0] > 0.0)) {
      throw ApiFailure(THURSTON_ERR_DOMAIN, what + ": homogeneous coordinate x0 must be positive");
    }
    return {v[1] / v[0], v[2] / v[0], v[3] / v[0]};
  }
  throw UsageFailure(what + ": expected 3 or 4 comma-separated numbers");
}

std::string fixed(double v, int digits) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  // Avoid printing "-0.000000".
  std::string s(buf);
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

json point_json(thurston_point p) { return json::array({p.x, p.y, p.z}); }

std::string point_text(thurston_point p, int digits) {
  return "(" + fixed(p.x, digits) + ", " + fixed(p.y, digits) + ", " + fixed(p.z, digits) + ")";
}

// Left-aligned column table with a two-space gutter.
void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << line << '\n';
  }
}

// ---- triangle ----

struct TriangleArgs {
  std::string a1 = "1,0,0";
  std::string a2;
  std::string a3;
};

int cmd_triangle(const Common& c, const TriangleArgs& a) {
  const thurston_point p1 = parse_point(a.a1, "--a1");
  const thurston_point p2 = parse_point(a.a2, "--a2");
  const thurston_point p3 = parse_point(a.a3, "--a3");
  thurston_triangle* raw = nullptr;
  check(thurston_triangle_create(c.kind(), p1, p2, p3, &raw));
  Triangle tri(raw);
  thurston_angles ang{};
  check(thurston_triangle_angles(tri.get(), &ang));
  int coplanar = 0;
  check(thurston_triangle_coplanar(tri.get(), &coplanar));
  thurston_angle_class cls{};
  check(thurston_triangle_classify(tri.get(), &cls));
  const char* cls_name = thurston_angle_class_name(cls);

  const int d = c.digits();
  switch (c.fmt()) {
    case Format::Json: {
      json j;
      j["schema"] = "v1";
      j["kind"] = c.geometry;
      j["a1"] = point_json(p1);
      j["a2"] = point_json(p2);
      j["a3"] = point_json(p3);
      j["w1"] = ang.w1;
      j["w2"] = ang.w2;
      j["w3"] = ang.w3;
      j["sum"] = ang.sum;
      j["class"] = cls_name;
      j["coplanar"] = coplanar != 0;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "kind,w1,w2,w3,sum,class,coplanar\n"
                << c.geometry << ',' << fixed(ang.w1, d) << ',' << fixed(ang.w2, d) << ','
                << fixed(ang.w3, d) << ',' << fixed(ang.sum, d) << ',' << cls_name << ','
                << (coplanar ? "true" : "false") << '\n';
      break;
    case Format::Table:
      print_table(std::cout, {{"w1", fixed(ang.w1, d)},
                              {"w2", fixed(ang.w2, d)},
                              {"w3", fixed(ang.w3, d)},
                              {"sum", fixed(ang.sum, d)},
                              {"class", cls_name},
                              {"coplanar", coplanar ? "yes" : "no"}});
      break;
  }
  return kExitOk;
}

// ---- tables ----

int cmd_tables(const Common& c, double corrupt_reference) {
  thurston_table_report* raw = nullptr;
  check(thurston_tables_reproduce(corrupt_reference, &raw));
  TableReport report(raw);
  const std::size_t n = thurston_table_report_size(report.get());
  const double max_dev = thurston_table_report_max_deviation(report.get());
  const double tol = thurston_table_tolerance();
  std::vector<thurston_table_row> rows(n);
  for (std::size_t i = 0; i < n; ++i) check(thurston_table_report_row(report.get(), i, &rows[i]));

  const int d = c.digits();
  switch (c.fmt()) {
    case Format::Json: {
      json j;
      j["schema"] = "v1";
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"table", r.table},
                       {"row", r.row},
                       {"a2", point_json(r.a2)},
                       {"a3", point_json(r.a3)},
                       {"w1", r.computed.w1},
                       {"w2", r.computed.w2},
                       {"w3", r.computed.w3},
                       {"sum", r.computed.sum},
                       {"ref", {r.reference.w1, r.reference.w2, r.reference.w3, r.reference.sum}},
                       {"delta", r.delta}});
      }
      j["rows"] = arr;
      j["max_deviation"] = max_dev;
      j["tolerance"] = tol;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "table,row,w1,w2,w3,sum,ref_sum,delta\n";
      for (const auto& r : rows) {
        std::cout << r.table << ',' << r.row << ',' << fixed(r.computed.w1, d) << ',' << fixed(r.computed.w2, d)
                  << ',' << fixed(r.computed.w3, d) << ',' << fixed(r.computed.sum, d) << ','
                  << fixed(r.reference.sum, d) << ',' << fixed(r.delta, 9) << '\n';
      }
      break;
    case Format::Table: {
      std::vector<std::vector<std::string>> t{{"table", "row", "a3", "w1", "w2", "w3", "sum", "ref_sum", "delta"}};
      for (const auto& r : rows) {
        t.push_back({std::to_string(r.table), std::to_string(r.row), point_text(r.a3, 4), fixed(r.computed.w1, d),
                     fixed(r.computed.w2, d), fixed(r.computed.w3, d), fixed(r.computed.sum, d),
                     fixed(r.reference.sum, d), fixed(r.delta, 9)});
      }
      print_table(std::cout, t);
      std::cout << "max deviation " << fixed(max_dev, 9) << " (tolerance " << fixed(tol, 6) << ")\n";
      break;
    }
  }
  if (!(max_dev <= tol)) {
    std::cerr << "CheckFailure: max deviation " << max_dev << " exceeds " << tol << '\n';
    return kExitCheck;
  }
  return kExitOk;
}

// ---- sweep ----

struct SweepArgs {
  std::string a2;
  std::string ray;
  double t_min = 1e-3;
  double t_max = 5.0;
  std::size_t samples = 512;
};

int cmd_sweep(const Common& c, const SweepArgs& a) {
  thurston_sweep_spec spec{};
  spec.geometry = c.kind();
  spec.a2 = parse_point(a.a2, "--a2");
  const std::vector<double> ray = parse_list(a.ray, "--ray");
  if (ray.size() != 3) throw UsageFailure("--ray: expected 3 comma-separated numbers");
  spec.ray = {ray[0], ray[1], ray[2]};
  spec.t_min = a.t_min;
  spec.t_max = a.t_max;
  spec.samples = a.samples;

  thurston_sweep* raw = nullptr;
  check(thurston_sweep_evaluate(&spec, &raw));
  Sweep sweep(raw);
  const int d = c.digits();

  if (c.fmt() != Format::Table) {
    thurston_string* text = nullptr;
    check(thurston_sweep_export(sweep.get(), c.fmt() == Format::Json ? THURSTON_FORMAT_JSON : THURSTON_FORMAT_CSV,
                                d, &text));
    String s(text);
    std::cout << thurston_string_data(s.get());
    if (c.fmt() == Format::Json) std::cout << '\n';
    return kExitOk;
  }

  double t0 = 0.0, s0 = 0.0;
  thurston_extremum kind{};
  check(thurston_sweep_extremum(sweep.get(), &t0, &s0, &kind));
  std::vector<std::vector<std::string>> t{{"t", "S_t"}};
  const std::size_t n = thurston_sweep_size(sweep.get());
  for (std::size_t i = 0; i < n; ++i) {
    double ti = 0.0, si = 0.0;
    check(thurston_sweep_sample(sweep.get(), i, &ti, &si));
    t.push_back({fixed(ti, d), fixed(si, d)});
  }
  print_table(std::cout, t);
  std::cout << "extremum " << thurston_extremum_name(kind) << "  t0 " << fixed(t0, d) << "  S(t0) " << fixed(s0, d)
            << '\n';
  return kExitOk;
}

// ---- geodesic ----

struct GeodesicArgs {
  std::string to;
  std::string params;
  std::size_t samples = 64;
};

int cmd_geodesic(const Common& c, const GeodesicArgs& a) {
  if (a.to.empty() == a.params.empty()) throw UsageFailure("give exactly one of --to or --params");
  thurston_params g{};
  const char* case_name = nullptr;
  std::optional<thurston_point> target;
  if (!a.to.empty()) {
    target = parse_point(a.to, "--to");
    check(thurston_geodesic_case(c.kind(), *target, &case_name));
    check(thurston_geodesic_params(c.kind(), *target, &g));
  } else {
    const std::vector<double> p = parse_list(a.params, "--params");
    if (p.size() != 3) throw UsageFailure("--params: expected u,v,tau");
    g = {p[0], p[1], p[2]};
    // Accept typed approximations of the fibre direction such as 1.5708.
    constexpr double kHalfPi = 1.57079632679489661923;
    if (std::abs(std::abs(g.v) - kHalfPi) <= 1e-4) g.v = std::copysign(kHalfPi, g.v);
  }
  thurston_curve* raw = nullptr;
  check(thurston_curve_sample(c.kind(), g, a.samples, &raw));
  Curve curve(raw);
  std::vector<thurston_point> pts(thurston_curve_size(curve.get()));
  for (std::size_t i = 0; i < pts.size(); ++i) check(thurston_curve_point(curve.get(), i, &pts[i]));
  auto param_at = [&](std::size_t i) { return g.tau * static_cast<double>(i) / static_cast<double>(pts.size() - 1); };

  const int d = c.digits();
  switch (c.fmt()) {
    case Format::Json: {
      json j;
      j["schema"] = "v1";
      j["kind"] = c.geometry;
      if (target) j["target"] = point_json(*target);
      if (case_name != nullptr) j["case"] = case_name;
      j["params"] = {{"u", g.u}, {"v", g.v}, {"tau", g.tau}};
      json arr = json::array();
      for (const auto& p : pts) arr.push_back(point_json(p));
      j["points"] = arr;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "s,x,y,z\n";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        std::cout << fixed(param_at(i), d) << ',' << fixed(pts[i].x, d) << ',' << fixed(pts[i].y, d) << ','
                  << fixed(pts[i].z, d) << '\n';
      }
      break;
    case Format::Table: {
      std::cout << "u " << fixed(g.u, d) << "  v " << fixed(g.v, d) << "  tau " << fixed(g.tau, d);
      if (case_name != nullptr) std::cout << "  case " << case_name;
      std::cout << '\n';
      std::vector<std::vector<std::string>> t{{"s", "x", "y", "z"}};
      for (std::size_t i = 0; i < pts.size(); ++i) {
        t.push_back({fixed(param_at(i), d), fixed(pts[i].x, d), fixed(pts[i].y, d), fixed(pts[i].z, d)});
      }
      print_table(std::cout, t);
      break;
    }
  }
  return kExitOk;
}

// ---- verify ----

int cmd_verify(const Common& c, std::size_t trials, std::uint64_t seed, const std::string& inject) {
  if (trials < 1) throw UsageFailure("--trials must be at least 1");
  thurston_verify_report* raw = nullptr;
  check(thurston_verify_run(c.kind(), trials, seed, inject.empty() ? nullptr : inject.c_str(), &raw));
  VerifyReport report(raw);
  std::vector<thurston_suite_result> suites(thurston_verify_suite_count(report.get()));
  for (std::size_t i = 0; i < suites.size(); ++i) check(thurston_verify_suite(report.get(), i, &suites[i]));
  const bool ok = thurston_verify_ok(report.get()) != 0;

  switch (c.fmt()) {
    case Format::Json: {
      json j;
      j["schema"] = "v1";
      j["kind"] = c.geometry;
      j["trials"] = trials;
      j["seed"] = seed;
      json arr = json::array();
      for (const auto& s : suites) {
        arr.push_back({{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}, {"first_failure", s.first_failure}});
      }
      j["suites"] = arr;
      j["ok"] = ok;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << "suite,passed,failed\n";
      for (const auto& s : suites) std::cout << s.name << ',' << s.passed << ',' << s.failed << '\n';
      break;
    case Format::Table: {
      std::vector<std::vector<std::string>> t{{"suite", "passed", "failed", "status"}};
      for (const auto& s : suites) {
        t.push_back({s.name, std::to_string(s.passed), std::to_string(s.failed), s.failed == 0 ? "ok" : "FAIL"});
      }
      print_table(std::cout, t);
      break;
    }
  }
  if (!ok) {
    for (const auto& s : suites) {
      if (s.failed > 0) std::cerr << "PropertyFailure: " << s.name << ": " << s.first_failure << '\n';
    }
    return kExitCheck;
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Common& c, bool with_geometry) {
  if (with_geometry) {
    sub->add_option("--geometry", c.geometry, "Model geometry")
        ->check(CLI::IsMember({"s2r", "h2r"}))
        ->capture_default_str();
  }
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  sub->add_option("--precision", c.precision, "Decimals in table and csv output (default 6)")
      ->check(CLI::Range(0, 17));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic triangles in the S2xR and H2xR model geometries"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(thurston_version()));

  Common common;

  TriangleArgs tri;
  CLI::App* triangle = app.add_subcommand("triangle", "Interior angles of a geodesic triangle");
  add_common(triangle, common, true);
  triangle->add_option("--a1", tri.a1, "First vertex x,y,z or x0,x,y,z")->capture_default_str();
  triangle->add_option("--a2", tri.a2, "Second vertex")->required();
  triangle->add_option("--a3", tri.a3, "Third vertex")->required();

  double corrupt = 0.0;
  CLI::App* tables = app.add_subcommand("tables", "Recompute the reference angle tables");
  add_common(tables, common, false);
  tables->add_option("--corrupt-reference", corrupt)->group("");

  SweepArgs sw;
  CLI::App* sweep = app.add_subcommand("sweep", "Angle sum along A3(t) = t * ray");
  add_common(sweep, common, true);
  sweep->add_option("--a2", sw.a2, "Second vertex")->required();
  sweep->add_option("--ray", sw.ray, "Direction x,y,z of the third vertex")->required();
  sweep->add_option("--t-min", sw.t_min, "Smallest t")->capture_default_str();
  sweep->add_option("--t-max", sw.t_max, "Largest t")->capture_default_str();
  sweep->add_option("--samples", sw.samples, "Grid size")->capture_default_str();

  GeodesicArgs geo;
  CLI::App* geodesic = app.add_subcommand("geodesic", "Sample a geodesic from the base point (1,1,0,0)");
  add_common(geodesic, common, true);
  geodesic->add_option("--to", geo.to, "Target point x,y,z");
  geodesic->add_option("--params", geo.params, "Direction and length u,v,tau");
  geodesic->add_option("--samples", geo.samples, "Number of points")->capture_default_str();

  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::string inject;
  CLI::App* verify = app.add_subcommand("verify", "Randomized property checks against independent oracles");
  add_common(verify, common, true);
  verify->add_option("--trials", trials, "Trials per suite")->capture_default_str();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--inject-fault", inject)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (*triangle) return cmd_triangle(common, tri);
    if (*tables) return cmd_tables(common, corrupt);
    if (*sweep) return cmd_sweep(common, sw);
    if (*geodesic) return cmd_geodesic(common, geo);
    if (*verify) return cmd_verify(common, trials, seed, inject);
  } catch (const ApiFailure& e) {
    std::cerr << thurston_status_name(e.status) << ": " << e.what() << '\n';
    return exit_code_for(e.status);
  } catch (const UsageFailure& e) {
    std::cerr << "UsageError: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitCheck;
}
