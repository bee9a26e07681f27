#include "thurston/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "thurston/errors.hpp"
#include "thurston/geodesic.hpp"
#include "thurston/isometry.hpp"
#include "thurston/oracle.hpp"
#include "thurston/sampling.hpp"
#include "thurston/triangle.hpp"

namespace thurston {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInjected = 1e-3;

std::string describe(const ModelPoint& p) {
  std::ostringstream os;
  os.precision(17);
  os << p.x() << ',' << p.y() << ',' << p.z();
  return os.str();
}

std::string describe(const GeodesicTriangle& t) {
  return "a1=" + describe(t.vertex(1)) + " a2=" + describe(t.vertex(2)) + " a3=" + describe(t.vertex(3));
}

// Runs `trial` `trials` times; a trial returns an empty string on success or
// a description of the failing input.
SuiteReport run_suite(const std::string& name, std::size_t trials,
                      const std::function<std::string()>& trial) {
  SuiteReport r;
  r.name = name;
  for (std::size_t i = 0; i < trials; ++i) {
    std::string failure;
    try {
      failure = trial();
    } catch (const Error& e) {
      failure = std::string(error_kind_name(e.kind())) + ": " + e.what();
    }
    if (failure.empty()) {
      ++r.passed;
    } else {
      if (r.failed == 0) r.first_failure = failure;
      ++r.failed;
    }
  }
  return r;
}

// Differential of the projective action at p applied to the tangent h.
Eigen::Vector3d push_forward(const IsometryMatrix& m, const ModelPoint& p, const Eigen::Vector3d& h) {
  const Eigen::RowVector4d row(1.0, p.x(), p.y(), p.z());
  const Eigen::RowVector4d drow(0.0, h.x(), h.y(), h.z());
  const Eigen::RowVector4d img = row * m.matrix();
  const Eigen::RowVector4d dimg = drow * m.matrix();
  const double w = img[0];
  return ((dimg.tail<3>() * w - img.tail<3>() * dimg[0]) / (w * w)).transpose();
}

}  // namespace

double roundtrip_rounding_bound(GeometryKind kind, const GeodesicParams& g) {
  if (kind == GeometryKind::SphereTimesR) return 0.0;
  const double s = std::abs(g.tau * std::cos(g.v));
  return std::numeric_limits<double>::epsilon() * std::exp(2.0 * s);
}

bool VerifyReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.failed == 0; });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"roundtrip", "isometry-invariance", "ode-equivalence",
                                              "trichotomy", "antipodality"};
  return names;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.trials < 1) throw PrecondError("verification needs at least one trial");
  const GeometryKind kind = options.kind;
  const bool sphere = kind == GeometryKind::SphereTimesR;
  sampling::Rng rng(options.seed);
  auto injected = [&options](const char* suite) {
    return options.inject_fault == suite ? kInjected : 0.0;
  };

  VerifyReport report;
  report.kind = kind;
  report.trials = options.trials;
  report.seed = options.seed;

  report.suites.push_back(run_suite("roundtrip", options.trials, [&]() -> std::string {
    const GeodesicParams g = sampling::random_params(kind, rng, sphere ? 4.0 : 10.0);
    const GeodesicParams back = geodesic_params(kind, geodesic_point(kind, g));
    const double err = std::max({angular_distance(back.u, g.u), std::abs(back.v - g.v),
                                 std::abs(back.tau - g.tau)}) + injected("roundtrip");
    if (err <= 1e-9 + roundtrip_rounding_bound(kind, g)) return {};
    std::ostringstream os;
    os.precision(17);
    os << "u=" << g.u << " v=" << g.v << " tau=" << g.tau << " recovered u=" << back.u
       << " v=" << back.v << " tau=" << back.tau;
    return os.str();
  }));

  report.suites.push_back(run_suite("isometry-invariance", options.trials, [&]() -> std::string {
    const ModelPoint p = sampling::random_point(kind, rng);
    const ModelPoint q = sampling::random_point(kind, rng);
    const ModelPoint a = sampling::random_point(kind, rng);
    const IsometryMatrix m = to_origin(kind, a);
    const double before = distance(kind, p, q);
    const double after = distance(kind, apply(m, p), apply(m, q));
    const double origin_err = (apply(m, a).spatial() - base_point().spatial()).lpNorm<Eigen::Infinity>();
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const Eigen::Vector3d h(unit(rng), unit(rng), unit(rng));
    const double form = metric_at(kind, p).quadratic(h);
    const double pulled = metric_at(kind, apply(m, p)).quadratic(push_forward(m, p, h));
    const double err = std::abs(before - after) + injected("isometry-invariance");
    if (err <= 1e-8 && origin_err <= 1e-10 && std::abs(form - pulled) <= 1e-8 * std::max(1.0, form)) {
      return {};
    }
    std::ostringstream os;
    os.precision(17);
    os << "p=" << describe(p) << " q=" << describe(q) << " a=" << describe(a) << " d=" << before
       << " d'=" << after << " origin_err=" << origin_err << " form=" << form << " pulled=" << pulled;
    return os.str();
  }));

  report.suites.push_back(run_suite("ode-equivalence", options.trials, [&]() -> std::string {
    const GeodesicParams g = sampling::random_params(kind, rng, 2.0);
    const GeodesicIntegration sol = integrate_geodesic(kind, g, 100);
    const ModelPoint closed = geodesic_point(kind, g);
    const double err = (sol.points.back().spatial() - closed.spatial()).lpNorm<Eigen::Infinity>() /
                           std::max(1.0, closed.spatial().lpNorm<Eigen::Infinity>()) +
                       injected("ode-equivalence");
    if (err <= 1e-6 && sol.max_speed_drift <= 1e-8) return {};
    std::ostringstream os;
    os.precision(17);
    os << "u=" << g.u << " v=" << g.v << " tau=" << g.tau << " endpoint error=" << err
       << " drift=" << sol.max_speed_drift;
    return os.str();
  }));

  report.suites.push_back(run_suite("trichotomy", options.trials, [&]() -> std::string {
    const GeodesicTriangle tri = sampling::random_triangle(kind, rng);
    const double sum = angle_sum(tri).sum;
    const double excess = sphere ? kPi - sum : sum - kPi;
    const GeodesicTriangle flat = sampling::random_coplanar_triangle(kind, rng);
    const double flat_sum = angle_sum(flat).sum;
    const double flat_err = std::abs(flat_sum - kPi) + injected("trichotomy");
    classify(tri);
    if (excess <= 1e-9 && flat_err <= 1e-8) return {};
    std::ostringstream os;
    os.precision(17);
    os << "triangle " << describe(tri) << " sum=" << sum << "; coplanar " << describe(flat)
       << " sum=" << flat_sum;
    return os.str();
  }));

  report.suites.push_back(run_suite("antipodality", options.trials, [&]() -> std::string {
    const GeodesicTriangle tri = sampling::random_triangle(kind, rng);
    const AntipodalResiduals r = antipodal_residuals(tri);
    const GeodesicTriangle flat = sampling::random_coplanar_triangle(kind, rng);
    const AntipodalResiduals rf = antipodal_residuals(flat);
    const double err = std::max({r.side12, r.side13, rf.side12, rf.side13, rf.side23}) +
                       injected("antipodality");
    if (err <= 1e-8) return {};
    std::ostringstream os;
    os.precision(17);
    os << "triangle " << describe(tri) << " residuals " << r.side12 << ',' << r.side13
       << "; coplanar " << describe(flat) << " residuals " << rf.side12 << ',' << rf.side13 << ','
       << rf.side23;
    return os.str();
  }));

  return report;
}

}  // namespace thurston
