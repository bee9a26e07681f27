#include "thurston/thurston.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "thurston/errors.hpp"
#include "thurston/geodesic.hpp"
#include "thurston/geometry.hpp"
#include "thurston/isometry.hpp"
#include "thurston/oracle.hpp"
#include "thurston/sweep.hpp"
#include "thurston/tables.hpp"
#include "thurston/triangle.hpp"
#include "thurston/verify.hpp"

struct thurston_isometry {
  thurston::IsometryMatrix m;
};

struct thurston_triangle {
  thurston::GeodesicTriangle tri;
};

struct thurston_curve {
  std::vector<thurston::ModelPoint> points;
};

struct thurston_sweep {
  thurston::SweepSpec spec;
  thurston::SweepResult result;
};

struct thurston_table_report {
  thurston::TableReport report;
};

struct thurston_verify_report {
  thurston::VerifyReport report;
};

struct thurston_string {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

thurston_status fail(thurston_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

thurston_status map_error(const thurston::Error& e) {
  using thurston::ErrorKind;
  thurston_status s = THURSTON_ERR_INTERNAL;
  switch (e.kind()) {
    case ErrorKind::Domain: s = THURSTON_ERR_DOMAIN; break;
    case ErrorKind::Degenerate: s = THURSTON_ERR_DEGENERATE; break;
    case ErrorKind::Precondition: s = THURSTON_ERR_PRECONDITION; break;
    case ErrorKind::Consistency: s = THURSTON_ERR_CONSISTENCY; break;
    case ErrorKind::Unreachable: s = THURSTON_ERR_UNREACHABLE; break;
    case ErrorKind::Singularity: s = THURSTON_ERR_SINGULARITY; break;
  }
  return fail(s, e.what());
}

// Runs body and converts exceptions to status codes.
template <typename F>
thurston_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return THURSTON_OK;
  } catch (const thurston::Error& e) {
    return map_error(e);
  } catch (const std::bad_alloc&) {
    return fail(THURSTON_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(THURSTON_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(THURSTON_ERR_INTERNAL, "unknown exception");
  }
}

thurston::GeometryKind kind_of(thurston_geometry g) {
  switch (g) {
    case THURSTON_S2R: return thurston::GeometryKind::SphereTimesR;
    case THURSTON_H2R: return thurston::GeometryKind::HyperbolicTimesR;
    default: break;
  }
  throw thurston::PrecondError("unknown geometry tag");
}

thurston::ModelPoint point_of(thurston_point p) { return thurston::ModelPoint(p.x, p.y, p.z); }

thurston_point to_c(const thurston::ModelPoint& p) { return {p.x(), p.y(), p.z()}; }

thurston::GeodesicParams params_of(thurston_params g) { return {g.u, g.v, g.tau}; }

thurston_angles to_c(const thurston::TriangleAngles& a) { return {a.w1, a.w2, a.w3, a.sum}; }

thurston::SweepSpec spec_of(const thurston_sweep_spec& s) {
  thurston::SweepSpec spec;
  spec.kind = kind_of(s.geometry);
  spec.a2 = point_of(s.a2);
  spec.ray = Eigen::Vector3d(s.ray.x, s.ray.y, s.ray.z);
  spec.t_min = s.t_min;
  spec.t_max = s.t_max;
  spec.samples = s.samples;
  return spec;
}

#define THURSTON_REQUIRE(ptr)                                                  \
  do {                                                                         \
    if ((ptr) == nullptr) return fail(THURSTON_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

}  // namespace

extern "C" {

const char* thurston_version(void) { return "1.0.0"; }

const char* thurston_status_name(thurston_status status) {
  switch (status) {
    case THURSTON_OK: return "OK";
    case THURSTON_ERR_DOMAIN: return "DomainError";
    case THURSTON_ERR_DEGENERATE: return "DegenerateError";
    case THURSTON_ERR_PRECONDITION: return "PrecondError";
    case THURSTON_ERR_CONSISTENCY: return "ConsistencyError";
    case THURSTON_ERR_UNREACHABLE: return "UnreachableError";
    case THURSTON_ERR_SINGULARITY: return "SingularityError";
    case THURSTON_ERR_NULL_ARGUMENT: return "NullArgument";
    case THURSTON_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

const char* thurston_last_error(void) { return g_last_error.c_str(); }

thurston_status thurston_contains(thurston_geometry geometry, const double homogeneous[4], int* out_member) {
  THURSTON_REQUIRE(homogeneous);
  THURSTON_REQUIRE(out_member);
  return guarded([&] {
    *out_member = thurston::contains(kind_of(geometry), std::array<double, 4>{homogeneous[0], homogeneous[1],
                                                                             homogeneous[2], homogeneous[3]})
                      ? 1
                      : 0;
  });
}

thurston_status thurston_metric_at(thurston_geometry geometry, thurston_point p, double out_g[9]) {
  THURSTON_REQUIRE(out_g);
  return guarded([&] {
    const thurston::MetricTensor m = thurston::metric_at(kind_of(geometry), point_of(p));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out_g[3 * i + j] = m.g(i, j);
  });
}

thurston_status thurston_to_model(thurston_geometry geometry, const double coords[3], thurston_point* out) {
  THURSTON_REQUIRE(coords);
  THURSTON_REQUIRE(out);
  return guarded([&] {
    const auto kind = kind_of(geometry);
    thurston::IntrinsicCoords c;
    if (kind == thurston::GeometryKind::SphereTimesR) {
      c = thurston::SphereCoords{coords[0], coords[1], coords[2]};
    } else {
      c = thurston::HyperbolicCoords{coords[0], coords[1], coords[2]};
    }
    *out = to_c(thurston::to_model(kind, c));
  });
}

thurston_status thurston_geodesic_point(thurston_geometry geometry, thurston_params g, thurston_point* out) {
  THURSTON_REQUIRE(out);
  return guarded([&] { *out = to_c(thurston::geodesic_point(kind_of(geometry), params_of(g))); });
}

thurston_status thurston_geodesic_params(thurston_geometry geometry, thurston_point p, thurston_params* out) {
  THURSTON_REQUIRE(out);
  return guarded([&] {
    const thurston::GeodesicParams g = thurston::geodesic_params(kind_of(geometry), point_of(p));
    *out = {g.u, g.v, g.tau};
  });
}

thurston_status thurston_geodesic_case(thurston_geometry geometry, thurston_point p, const char** out_name) {
  THURSTON_REQUIRE(out_name);
  return guarded([&] {
    *out_name = thurston::inverse_case_name(thurston::inverse_case(kind_of(geometry), point_of(p))).data();
  });
}

thurston_status thurston_tangent_of(thurston_params g, double out_tangent[3]) {
  THURSTON_REQUIRE(out_tangent);
  return guarded([&] {
    const thurston::TangentVector t = thurston::tangent_of(params_of(g));
    out_tangent[0] = t.dx;
    out_tangent[1] = t.dy;
    out_tangent[2] = t.dz;
  });
}

thurston_status thurston_distance(thurston_geometry geometry, thurston_point p1, thurston_point p2, double* out) {
  THURSTON_REQUIRE(out);
  return guarded([&] { *out = thurston::distance(kind_of(geometry), point_of(p1), point_of(p2)); });
}

thurston_status thurston_curve_sample(thurston_geometry geometry, thurston_params g, size_t n,
                                      thurston_curve** out) {
  THURSTON_REQUIRE(out);
  return guarded([&] {
    *out = new thurston_curve{thurston::sample_curve(kind_of(geometry), params_of(g), n)};
  });
}

thurston_status thurston_curve_integrate(thurston_geometry geometry, thurston_params g, size_t steps,
                                         thurston_curve** out, double* max_speed_drift) {
  THURSTON_REQUIRE(out);
  return guarded([&] {
    thurston::GeodesicIntegration sol = thurston::integrate_geodesic(kind_of(geometry), params_of(g), steps);
    if (max_speed_drift != nullptr) *max_speed_drift = sol.max_speed_drift;
    *out = new thurston_curve{std::move(sol.points)};
  });
}

size_t thurston_curve_size(const thurston_curve* curve) { return curve == nullptr ? 0 : curve->points.size(); }

thurston_status thurston_curve_point(const thurston_curve* curve, size_t index, thurston_point* out) {
  THURSTON_REQUIRE(curve);
  THURSTON_REQUIRE(out);
  if (index >= curve->points.size()) return fail(THURSTON_ERR_PRECONDITION, "curve index out of range");
  *out = to_c(curve->points[index]);
  return THURSTON_OK;
}

void thurston_curve_free(thurston_curve* curve) { delete curve; }

thurston_status thurston_arc_length(thurston_geometry geometry, const thurston_point* points, size_t n,
                                    double* out) {
  THURSTON_REQUIRE(points);
  THURSTON_REQUIRE(out);
  return guarded([&] {
    std::vector<thurston::ModelPoint> curve;
    curve.reserve(n);
    for (size_t i = 0; i < n; ++i) curve.push_back(point_of(points[i]));
    *out = thurston::arc_length_quadrature(kind_of(geometry), curve);
  });
}

thurston_status thurston_isometry_to_origin(thurston_geometry geometry, thurston_point a, thurston_isometry** out) {
  THURSTON_REQUIRE(out);
  return guarded([&] { *out = new thurston_isometry{thurston::to_origin(kind_of(geometry), point_of(a))}; });
}

thurston_status thurston_isometry_apply(const thurston_isometry* m, thurston_point p, thurston_point* out) {
  THURSTON_REQUIRE(m);
  THURSTON_REQUIRE(out);
  return guarded([&] { *out = to_c(thurston::apply(m->m, point_of(p))); });
}

thurston_status thurston_isometry_matrix(const thurston_isometry* m, double out[16]) {
  THURSTON_REQUIRE(m);
  THURSTON_REQUIRE(out);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[4 * i + j] = m->m.matrix()(i, j);
  return THURSTON_OK;
}

void thurston_isometry_free(thurston_isometry* m) { delete m; }

thurston_status thurston_triangle_create(thurston_geometry geometry, thurston_point a1, thurston_point a2,
                                         thurston_point a3, thurston_triangle** out) {
  THURSTON_REQUIRE(out);
  return guarded([&] {
    *out = new thurston_triangle{
        thurston::GeodesicTriangle(kind_of(geometry), point_of(a1), point_of(a2), point_of(a3))};
  });
}

thurston_status thurston_triangle_angles(const thurston_triangle* tri, thurston_angles* out) {
  THURSTON_REQUIRE(tri);
  THURSTON_REQUIRE(out);
  return guarded([&] { *out = to_c(thurston::angle_sum(tri->tri)); });
}

thurston_status thurston_triangle_coplanar(const thurston_triangle* tri, int* out) {
  THURSTON_REQUIRE(tri);
  THURSTON_REQUIRE(out);
  return guarded([&] { *out = thurston::coplanar_with_center(tri->tri) ? 1 : 0; });
}

thurston_status thurston_triangle_classify(const thurston_triangle* tri, thurston_angle_class* out) {
  THURSTON_REQUIRE(tri);
  THURSTON_REQUIRE(out);
  return guarded([&] {
    switch (thurston::classify(tri->tri)) {
      case thurston::AngleSumClass::SumEqualsPi: *out = THURSTON_SUM_EQUALS_PI; break;
      case thurston::AngleSumClass::SumAbovePi: *out = THURSTON_SUM_ABOVE_PI; break;
      case thurston::AngleSumClass::SumBelowPi: *out = THURSTON_SUM_BELOW_PI; break;
    }
  });
}

const char* thurston_angle_class_name(thurston_angle_class c) {
  switch (c) {
    case THURSTON_SUM_EQUALS_PI: return "equal";
    case THURSTON_SUM_ABOVE_PI: return "above";
    case THURSTON_SUM_BELOW_PI: return "below";
  }
  return "unknown";
}

void thurston_triangle_free(thurston_triangle* tri) { delete tri; }

thurston_status thurston_sweep_evaluate(const thurston_sweep_spec* spec, thurston_sweep** out) {
  THURSTON_REQUIRE(spec);
  THURSTON_REQUIRE(out);
  return guarded([&] {
    const thurston::SweepSpec s = spec_of(*spec);
    *out = new thurston_sweep{s, thurston::evaluate(s)};
  });
}

size_t thurston_sweep_size(const thurston_sweep* sweep) {
  return sweep == nullptr ? 0 : sweep->result.series.size();
}

thurston_status thurston_sweep_sample(const thurston_sweep* sweep, size_t index, double* t, double* s) {
  THURSTON_REQUIRE(sweep);
  THURSTON_REQUIRE(t);
  THURSTON_REQUIRE(s);
  if (index >= sweep->result.series.size()) return fail(THURSTON_ERR_PRECONDITION, "sweep index out of range");
  *t = sweep->result.series[index].first;
  *s = sweep->result.series[index].second;
  return THURSTON_OK;
}

thurston_status thurston_sweep_extremum(const thurston_sweep* sweep, double* t0, double* s0,
                                        thurston_extremum* kind) {
  THURSTON_REQUIRE(sweep);
  if (t0 != nullptr) *t0 = sweep->result.t_extremum;
  if (s0 != nullptr) *s0 = sweep->result.s_extremum;
  if (kind != nullptr) {
    switch (sweep->result.extremum_kind) {
      case thurston::ExtremumKind::Maximum: *kind = THURSTON_EXTREMUM_MAXIMUM; break;
      case thurston::ExtremumKind::Minimum: *kind = THURSTON_EXTREMUM_MINIMUM; break;
      case thurston::ExtremumKind::Flat: *kind = THURSTON_EXTREMUM_FLAT; break;
    }
  }
  return THURSTON_OK;
}

const char* thurston_extremum_name(thurston_extremum kind) {
  switch (kind) {
    case THURSTON_EXTREMUM_MAXIMUM: return "maximum";
    case THURSTON_EXTREMUM_MINIMUM: return "minimum";
    case THURSTON_EXTREMUM_FLAT: return "degenerate-flat";
  }
  return "unknown";
}

thurston_status thurston_sweep_export(const thurston_sweep* sweep, thurston_format format, int precision,
                                      thurston_string** out) {
  THURSTON_REQUIRE(sweep);
  THURSTON_REQUIRE(out);
  return guarded([&] {
    if (precision < 0 || precision > 17) throw thurston::PrecondError("precision must be in [0, 17]");
    if (format != THURSTON_FORMAT_CSV && format != THURSTON_FORMAT_JSON) {
      throw thurston::PrecondError("unknown output format");
    }
    std::string text = format == THURSTON_FORMAT_JSON ? thurston::to_json(sweep->spec, sweep->result)
                                                      : thurston::to_csv(sweep->result, precision);
    *out = new thurston_string{std::move(text)};
  });
}

thurston_status thurston_sweep_limits(const thurston_sweep_spec* spec, double large_t, double* s_near_zero,
                                      double* s_near_infinity) {
  THURSTON_REQUIRE(spec);
  THURSTON_REQUIRE(s_near_zero);
  THURSTON_REQUIRE(s_near_infinity);
  return guarded([&] {
    const thurston::SweepLimits l = thurston::limits_check(spec_of(*spec), large_t);
    *s_near_zero = l.s_near_zero;
    *s_near_infinity = l.s_near_infinity;
  });
}

void thurston_sweep_free(thurston_sweep* sweep) { delete sweep; }

thurston_status thurston_tables_reproduce(double reference_offset, thurston_table_report** out) {
  THURSTON_REQUIRE(out);
  return guarded([&] { *out = new thurston_table_report{thurston::reproduce_tables(reference_offset)}; });
}

size_t thurston_table_report_size(const thurston_table_report* report) {
  return report == nullptr ? 0 : report->report.rows.size();
}

thurston_status thurston_table_report_row(const thurston_table_report* report, size_t index,
                                          thurston_table_row* out) {
  THURSTON_REQUIRE(report);
  THURSTON_REQUIRE(out);
  if (index >= report->report.rows.size()) return fail(THURSTON_ERR_PRECONDITION, "row index out of range");
  const thurston::ReproducedRow& r = report->report.rows[index];
  out->table = r.published.table;
  out->row = r.published.row;
  out->a2 = to_c(r.published.a2);
  out->a3 = to_c(r.published.a3);
  out->computed = to_c(r.computed);
  out->reference = to_c(r.published.reference);
  out->delta = r.delta;
  return THURSTON_OK;
}

double thurston_table_report_max_deviation(const thurston_table_report* report) {
  return report == nullptr ? NAN : report->report.max_deviation;
}

double thurston_table_tolerance(void) { return thurston::kTableTolerance; }

void thurston_table_report_free(thurston_table_report* report) { delete report; }

thurston_status thurston_verify_run(thurston_geometry geometry, size_t trials, uint64_t seed,
                                    const char* inject_fault, thurston_verify_report** out) {
  THURSTON_REQUIRE(out);
  return guarded([&] {
    thurston::VerifyOptions opts;
    opts.kind = kind_of(geometry);
    opts.trials = trials;
    opts.seed = seed;
    if (inject_fault != nullptr) opts.inject_fault = inject_fault;
    *out = new thurston_verify_report{thurston::run_verification(opts)};
  });
}

size_t thurston_verify_suite_count(const thurston_verify_report* report) {
  return report == nullptr ? 0 : report->report.suites.size();
}

thurston_status thurston_verify_suite(const thurston_verify_report* report, size_t index,
                                      thurston_suite_result* out) {
  THURSTON_REQUIRE(report);
  THURSTON_REQUIRE(out);
  if (index >= report->report.suites.size()) return fail(THURSTON_ERR_PRECONDITION, "suite index out of range");
  const thurston::SuiteReport& s = report->report.suites[index];
  out->name = s.name.c_str();
  out->passed = s.passed;
  out->failed = s.failed;
  out->first_failure = s.first_failure.c_str();
  return THURSTON_OK;
}

int thurston_verify_ok(const thurston_verify_report* report) {
  return report != nullptr && report->report.ok() ? 1 : 0;
}

void thurston_verify_report_free(thurston_verify_report* report) { delete report; }

const char* thurston_string_data(const thurston_string* s) { return s == nullptr ? "" : s->text.c_str(); }

size_t thurston_string_size(const thurston_string* s) { return s == nullptr ? 0 : s->text.size(); }

void thurston_string_free(thurston_string* s) { delete s; }

}  // extern "C"
