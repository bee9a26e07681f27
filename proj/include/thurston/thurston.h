#ifndef THURSTON_THURSTON_H
#define THURSTON_THURSTON_H

/*
 * C interface to the thurston geometry engine: geodesics, isometries and
 * geodesic-triangle angle sums in S2xR and H2xR (projective model).
 *
 * Every function returns a thurston_status. On failure the message of the
 * most recent error on the calling thread is available from
 * thurston_last_error(). Objects returned through out-pointers are owned by
 * the caller and released with the matching *_free function.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(THURSTON_BUILDING_LIBRARY)
#    define THURSTON_API __declspec(dllexport)
#  else
#    define THURSTON_API __declspec(dllimport)
#  endif
#else
#  define THURSTON_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum thurston_status {
  THURSTON_OK = 0,
  THURSTON_ERR_DOMAIN = 1,        /* point outside the model */
  THURSTON_ERR_DEGENERATE = 2,    /* coincident vertices, excluded centre */
  THURSTON_ERR_PRECONDITION = 3,  /* malformed argument */
  THURSTON_ERR_CONSISTENCY = 4,   /* computed value contradicts a proven bound */
  THURSTON_ERR_UNREACHABLE = 5,
  THURSTON_ERR_SINGULARITY = 6,
  THURSTON_ERR_NULL_ARGUMENT = 7,
  THURSTON_ERR_INTERNAL = 8
} thurston_status;

typedef enum thurston_geometry {
  THURSTON_S2R = 0,
  THURSTON_H2R = 1,
  THURSTON_GEOMETRY_MAX_ = 0x7fffffff
} thurston_geometry;

typedef enum thurston_angle_class {
  THURSTON_SUM_EQUALS_PI = 0,
  THURSTON_SUM_ABOVE_PI = 1,
  THURSTON_SUM_BELOW_PI = 2
} thurston_angle_class;

typedef enum thurston_extremum {
  THURSTON_EXTREMUM_MAXIMUM = 0,
  THURSTON_EXTREMUM_MINIMUM = 1,
  THURSTON_EXTREMUM_FLAT = 2
} thurston_extremum;

typedef enum thurston_format {
  THURSTON_FORMAT_CSV = 0,
  THURSTON_FORMAT_JSON = 1,
  THURSTON_FORMAT_MAX_ = 0x7fffffff
} thurston_format;

/* Affine model point (1, x, y, z). */
typedef struct thurston_point {
  double x, y, z;
} thurston_point;

typedef struct thurston_params {
  double u, v, tau;
} thurston_params;

typedef struct thurston_angles {
  double w1, w2, w3, sum;
} thurston_angles;

typedef struct thurston_sweep_spec {
  thurston_geometry geometry;
  thurston_point a2;
  thurston_point ray;
  double t_min;
  double t_max;
  size_t samples;
} thurston_sweep_spec;

typedef struct thurston_table_row {
  int table;
  int row;
  thurston_point a2;
  thurston_point a3;
  thurston_angles computed;
  thurston_angles reference;
  double delta;
} thurston_table_row;

typedef struct thurston_suite_result {
  const char* name;           /* valid while the report lives */
  size_t passed;
  size_t failed;
  const char* first_failure;  /* empty when nothing failed */
} thurston_suite_result;

typedef struct thurston_isometry thurston_isometry;
typedef struct thurston_triangle thurston_triangle;
typedef struct thurston_curve thurston_curve;
typedef struct thurston_sweep thurston_sweep;
typedef struct thurston_table_report thurston_table_report;
typedef struct thurston_verify_report thurston_verify_report;
typedef struct thurston_string thurston_string;

/* ---- diagnostics ---- */
THURSTON_API const char* thurston_version(void);
THURSTON_API const char* thurston_status_name(thurston_status status);
THURSTON_API const char* thurston_last_error(void);

/* ---- geometry core ---- */
/* Total predicate on a raw homogeneous tuple; x0 <= 0 yields 0. */
THURSTON_API thurston_status thurston_contains(thurston_geometry geometry, const double homogeneous[4],
                                               int* out_member);
/* Row-major 3x3 metric tensor in the Cartesian chart. */
THURSTON_API thurston_status thurston_metric_at(thurston_geometry geometry, thurston_point p,
                                                double out_g[9]);
/* (t, phi, theta) for S2xR, (t, r, alpha) for H2xR. */
THURSTON_API thurston_status thurston_to_model(thurston_geometry geometry, const double coords[3],
                                               thurston_point* out);

/* ---- geodesics ---- */
THURSTON_API thurston_status thurston_geodesic_point(thurston_geometry geometry, thurston_params g,
                                                     thurston_point* out);
THURSTON_API thurston_status thurston_geodesic_params(thurston_geometry geometry, thurston_point p,
                                                      thurston_params* out);
/* "generic", "unit-norm", "fibre-axis" or "opposite-axis"; static storage. */
THURSTON_API thurston_status thurston_geodesic_case(thurston_geometry geometry, thurston_point p,
                                                    const char** out_name);
THURSTON_API thurston_status thurston_tangent_of(thurston_params g, double out_tangent[3]);
THURSTON_API thurston_status thurston_distance(thurston_geometry geometry, thurston_point p1,
                                               thurston_point p2, double* out);

/* ---- curves ---- */
THURSTON_API thurston_status thurston_curve_sample(thurston_geometry geometry, thurston_params g,
                                                   size_t n, thurston_curve** out);
/* ODE oracle: steps + 1 points; max_speed_drift may be NULL. */
THURSTON_API thurston_status thurston_curve_integrate(thurston_geometry geometry, thurston_params g,
                                                      size_t steps, thurston_curve** out,
                                                      double* max_speed_drift);
THURSTON_API size_t thurston_curve_size(const thurston_curve* curve);
THURSTON_API thurston_status thurston_curve_point(const thurston_curve* curve, size_t index,
                                                  thurston_point* out);
THURSTON_API void thurston_curve_free(thurston_curve* curve);
THURSTON_API thurston_status thurston_arc_length(thurston_geometry geometry, const thurston_point* points,
                                                 size_t n, double* out);

/* ---- isometries ---- */
THURSTON_API thurston_status thurston_isometry_to_origin(thurston_geometry geometry, thurston_point a,
                                                         thurston_isometry** out);
THURSTON_API thurston_status thurston_isometry_apply(const thurston_isometry* m, thurston_point p,
                                                     thurston_point* out);
/* Row-major 4x4, normalized to m[0] = 1, acting on row vectors. */
THURSTON_API thurston_status thurston_isometry_matrix(const thurston_isometry* m, double out[16]);
THURSTON_API void thurston_isometry_free(thurston_isometry* m);

/* ---- triangles ---- */
THURSTON_API thurston_status thurston_triangle_create(thurston_geometry geometry, thurston_point a1,
                                                      thurston_point a2, thurston_point a3,
                                                      thurston_triangle** out);
THURSTON_API thurston_status thurston_triangle_angles(const thurston_triangle* tri, thurston_angles* out);
THURSTON_API thurston_status thurston_triangle_coplanar(const thurston_triangle* tri, int* out);
THURSTON_API thurston_status thurston_triangle_classify(const thurston_triangle* tri,
                                                        thurston_angle_class* out);
THURSTON_API const char* thurston_angle_class_name(thurston_angle_class c);
THURSTON_API void thurston_triangle_free(thurston_triangle* tri);

/* ---- sweeps ---- */
THURSTON_API thurston_status thurston_sweep_evaluate(const thurston_sweep_spec* spec, thurston_sweep** out);
THURSTON_API size_t thurston_sweep_size(const thurston_sweep* sweep);
THURSTON_API thurston_status thurston_sweep_sample(const thurston_sweep* sweep, size_t index, double* t,
                                                   double* s);
/* t0 is NaN for a flat family. */
THURSTON_API thurston_status thurston_sweep_extremum(const thurston_sweep* sweep, double* t0, double* s0,
                                                     thurston_extremum* kind);
THURSTON_API const char* thurston_extremum_name(thurston_extremum kind);
/* CSV uses `precision` decimals; JSON keeps full precision. */
THURSTON_API thurston_status thurston_sweep_export(const thurston_sweep* sweep, thurston_format format,
                                                   int precision, thurston_string** out);
THURSTON_API thurston_status thurston_sweep_limits(const thurston_sweep_spec* spec, double large_t,
                                                   double* s_near_zero, double* s_near_infinity);
THURSTON_API void thurston_sweep_free(thurston_sweep* sweep);

/* ---- published tables ---- */
THURSTON_API thurston_status thurston_tables_reproduce(double reference_offset, thurston_table_report** out);
THURSTON_API size_t thurston_table_report_size(const thurston_table_report* report);
THURSTON_API thurston_status thurston_table_report_row(const thurston_table_report* report, size_t index,
                                                       thurston_table_row* out);
THURSTON_API double thurston_table_report_max_deviation(const thurston_table_report* report);
THURSTON_API double thurston_table_tolerance(void);
THURSTON_API void thurston_table_report_free(thurston_table_report* report);

/* ---- property verification ---- */
/* inject_fault: NULL or a suite name whose residual gets offset by 1e-3. */
THURSTON_API thurston_status thurston_verify_run(thurston_geometry geometry, size_t trials, uint64_t seed,
                                                 const char* inject_fault, thurston_verify_report** out);
THURSTON_API size_t thurston_verify_suite_count(const thurston_verify_report* report);
THURSTON_API thurston_status thurston_verify_suite(const thurston_verify_report* report, size_t index,
                                                   thurston_suite_result* out);
THURSTON_API int thurston_verify_ok(const thurston_verify_report* report);
THURSTON_API void thurston_verify_report_free(thurston_verify_report* report);

/* ---- strings ---- */
THURSTON_API const char* thurston_string_data(const thurston_string* s);
THURSTON_API size_t thurston_string_size(const thurston_string* s);
THURSTON_API void thurston_string_free(thurston_string* s);

#ifdef __cplusplus
}
#endif

#endif /* THURSTON_THURSTON_H */
