#include "thurston/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/LU>
#include <json.hpp>

#include "thurston/errors.hpp"
#include "thurston/triangle.hpp"

namespace thurston {

namespace {

constexpr double kRefineWidth = 1e-7;

bool family_is_flat(const SweepSpec& spec) {
  Eigen::Matrix3d m;
  m.row(0) = Eigen::Vector3d::UnitX();
  m.row(1) = spec.a2.spatial();
  m.row(2) = spec.ray;
  const double scale = spec.a2.spatial().norm() * spec.ray.norm();
  return std::abs(m.determinant()) <= default_numerics().coplanarity * scale;
}

// Golden-section search for the maximum of sign * f on [lo, hi].
template <typename F>
double golden_section(F&& f, double lo, double hi, double sign) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = sign * f(c), fd = sign * f(d);
  while (hi - lo > kRefineWidth) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = sign * f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = sign * f(d);
    }
  }
  return 0.5 * (lo + hi);
}

GeometryKind parse_kind(const std::string& s) {
  if (s == "s2r") return GeometryKind::SphereTimesR;
  if (s == "h2r") return GeometryKind::HyperbolicTimesR;
  throw PrecondError("unknown geometry '" + s + "'");
}

}  // namespace

std::string_view extremum_kind_name(ExtremumKind k) noexcept {
  switch (k) {
    case ExtremumKind::Maximum: return "maximum";
    case ExtremumKind::Minimum: return "minimum";
    case ExtremumKind::Flat: return "degenerate-flat";
  }
  return "unknown";
}

ModelPoint sweep_vertex(const SweepSpec& spec, double t) { return ModelPoint(t * spec.ray); }

double sweep_sum(const SweepSpec& spec, double t) {
  const GeodesicTriangle tri(spec.kind, base_point(), spec.a2, sweep_vertex(spec, t));
  return angle_sum(tri).sum;
}

void validate(const SweepSpec& spec) {
  if (!(spec.t_min > 0.0) || !(spec.t_max > spec.t_min) || !std::isfinite(spec.t_max)) {
    throw PrecondError("sweep range must satisfy 0 < t_min < t_max");
  }
  if (spec.samples < 3) throw PrecondError("a sweep needs at least three samples");
  if (spec.ray.norm() == 0.0) throw PrecondError("sweep ray must be non-zero");
  require_member(spec.kind, spec.a2, "A2");
  // The ray meets the model in a convex set (H2xR cone) or everything but E0,
  // so checking the endpoints covers the whole range.
  require_member(spec.kind, sweep_vertex(spec, spec.t_min), "A3(t_min)");
  require_member(spec.kind, sweep_vertex(spec, spec.t_max), "A3(t_max)");
}

SweepResult evaluate(const SweepSpec& spec) {
  validate(spec);
  SweepResult r;
  r.series.resize(spec.samples);
  const double log_lo = std::log(spec.t_min), log_hi = std::log(spec.t_max);
  for (std::size_t i = 0; i < spec.samples; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(spec.samples - 1);
    const double t = i + 1 == spec.samples ? spec.t_max : (i == 0 ? spec.t_min : std::exp(log_lo + f * (log_hi - log_lo)));
    r.series[i] = {t, sweep_sum(spec, t)};
  }

  if (family_is_flat(spec)) {
    r.extremum_kind = ExtremumKind::Flat;
    r.t_extremum = std::numeric_limits<double>::quiet_NaN();
    r.s_extremum = r.series.front().second;
    return r;
  }

  const bool maximize = spec.kind == GeometryKind::SphereTimesR;
  r.extremum_kind = maximize ? ExtremumKind::Maximum : ExtremumKind::Minimum;
  const double sign = maximize ? 1.0 : -1.0;
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.series.size(); ++i) {
    if (sign * r.series[i].second > sign * r.series[best].second) best = i;
  }
  const double lo = r.series[best == 0 ? 0 : best - 1].first;
  const double hi = r.series[std::min(best + 1, r.series.size() - 1)].first;
  const auto s = [&spec](double t) { return sweep_sum(spec, t); };
  r.t_extremum = golden_section(s, lo, hi, sign);
  r.s_extremum = s(r.t_extremum);
  return r;
}

SweepLimits limits_check(const SweepSpec& spec, double large_t) {
  SweepSpec wide = spec;
  wide.t_max = std::max(spec.t_max, large_t);
  validate(wide);
  return {sweep_sum(spec, spec.t_min), sweep_sum(spec, large_t)};
}

std::string to_csv(const SweepResult& result, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision);
  os << "t,S_t\n";
  for (const auto& [t, s] : result.series) os << t << ',' << s << '\n';
  return os.str();
}

std::string to_json(const SweepSpec& spec, const SweepResult& result) {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["kind"] = std::string(geometry_name(spec.kind));
  j["a2"] = {spec.a2.x(), spec.a2.y(), spec.a2.z()};
  j["ray"] = {spec.ray.x(), spec.ray.y(), spec.ray.z()};
  nlohmann::ordered_json series = nlohmann::ordered_json::array();
  for (const auto& [t, s] : result.series) series.push_back({t, s});
  j["series"] = std::move(series);
  if (std::isnan(result.t_extremum)) {
    j["t0"] = nullptr;
  } else {
    j["t0"] = result.t_extremum;
  }
  j["s0"] = result.s_extremum;
  j["extremum_kind"] = std::string(extremum_kind_name(result.extremum_kind));
  return j.dump();
}

std::pair<SweepSpec, SweepResult> sweep_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("schema").get<std::string>() != "v1") throw PrecondError("unsupported sweep schema");
    SweepSpec spec;
    SweepResult r;
    spec.kind = parse_kind(j.at("kind").get<std::string>());
    const auto a2 = j.at("a2").get<std::vector<double>>();
    const auto ray = j.at("ray").get<std::vector<double>>();
    if (a2.size() != 3 || ray.size() != 3) throw PrecondError("a2 and ray must be triples");
    spec.a2 = ModelPoint(a2[0], a2[1], a2[2]);
    spec.ray = Eigen::Vector3d(ray[0], ray[1], ray[2]);
    for (const auto& row : j.at("series")) {
      r.series.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
    }
    if (!r.series.empty()) {
      spec.t_min = r.series.front().first;
      spec.t_max = r.series.back().first;
      spec.samples = r.series.size();
    }
    r.t_extremum = j.at("t0").is_null() ? std::numeric_limits<double>::quiet_NaN()
                                        : j.at("t0").get<double>();
    r.s_extremum = j.at("s0").get<double>();
    const auto kind = j.at("extremum_kind").get<std::string>();
    if (kind == "maximum") {
      r.extremum_kind = ExtremumKind::Maximum;
    } else if (kind == "minimum") {
      r.extremum_kind = ExtremumKind::Minimum;
    } else if (kind == "degenerate-flat") {
      r.extremum_kind = ExtremumKind::Flat;
    } else {
      throw PrecondError("unknown extremum kind '" + kind + "'");
    }
    return {spec, r};
  } catch (const nlohmann::json::exception& e) {
    throw PrecondError(std::string("malformed sweep json: ") + e.what());
  }
}

}  // namespace thurston
