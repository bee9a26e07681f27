// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "thurston/geodesic.hpp"
#include "thurston/isometry.hpp"
#include "thurston/oracle.hpp"
#include "thurston/sampling.hpp"
#include "thurston/sweep.hpp"
#include "thurston/tables.hpp"
#include "thurston/triangle.hpp"
#include "thurston/verify.hpp"

using namespace thurston;

namespace {

constexpr auto S2R = GeometryKind::SphereTimesR;
constexpr auto H2R = GeometryKind::HyperbolicTimesR;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

template <typename... Args>
std::string fmtv(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

SweepSpec sphere_family() {
  SweepSpec s;
  s.kind = S2R;
  s.a2 = ModelPoint(3, -2, 1);
  s.ray = Eigen::Vector3d(2, 1, 0);
  s.t_min = 1e-3;
  s.t_max = 5.0;
  s.samples = 512;
  return s;
}

SweepSpec hyperbolic_family() {
  SweepSpec s;
  s.kind = H2R;
  s.a2 = ModelPoint(2, 1.5, 1);
  s.ray = Eigen::Vector3d(3, -1, 0);
  s.t_min = 1e-3;
  s.t_max = 5.0;
  s.samples = 512;
  return s;
}

Outcome table(int which, double limit_s) {
  const auto start = std::chrono::steady_clock::now();
  const TableReport report = reproduce_tables();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double worst = 0.0;
  int rows = 0;
  for (const ReproducedRow& r : report.rows) {
    if (r.published.table != which) continue;
    worst = std::max(worst, r.delta);
    ++rows;
  }
  Outcome o;
  o.pass = rows == 5 && worst <= kTableTolerance && secs < limit_s;
  o.detail = fmtv("%d rows, max |delta| %.2e (tol 1e-4), %.3f s", rows, worst, secs);
  return o;
}

Outcome sweep_extremum(const SweepSpec& spec, double t_ref, double s_ref, ExtremumKind kind) {
  const auto start = std::chrono::steady_clock::now();
  const SweepResult r = evaluate(spec);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = r.extremum_kind == kind && std::abs(r.t_extremum - t_ref) <= 1e-3 &&
           std::abs(r.s_extremum - s_ref) <= 1e-3 && secs < 10.0;
  o.detail = fmtv("%s t0 = %.6f (ref %.5f), S(t0) = %.6f (ref %.5f), %.3f s",
                  std::string(extremum_kind_name(r.extremum_kind)).c_str(), r.t_extremum, t_ref,
                  r.s_extremum, s_ref, secs);
  return o;
}

Outcome trichotomy() {
  sampling::Rng rng(42);
  double s_min = INFINITY, h_max = -INFINITY, flat = 0.0;
  for (int i = 0; i < 500; ++i) {
    s_min = std::min(s_min, angle_sum(sampling::random_triangle(S2R, rng)).sum);
    h_max = std::max(h_max, angle_sum(sampling::random_triangle(H2R, rng)).sum);
  }
  for (int i = 0; i < 200; ++i) {
    for (auto kind : {S2R, H2R}) {
      flat = std::max(flat, std::abs(angle_sum(sampling::random_coplanar_triangle(kind, rng)).sum - kPi));
    }
  }
  Outcome o;
  o.pass = s_min >= kPi - 1e-9 && h_max <= kPi + 1e-9 && flat <= 1e-8;
  o.detail = fmtv("S2xR min sum - pi = %+.2e, H2xR max sum - pi = %+.2e, coplanar max |sum - pi| = %.2e",
                  s_min - kPi, h_max - kPi, flat);
  return o;
}

Outcome roundtrip() {
  Outcome o;
  o.pass = true;
  for (auto kind : {S2R, H2R}) {
    sampling::Rng rng(42);
    const double tau_max = kind == S2R ? 4.0 : 10.0;
    double worst = 0.0;
    int over = 0, over_explained = 0;
    for (int i = 0; i < 1000; ++i) {
      const GeodesicParams g = sampling::random_params(kind, rng, tau_max);
      const GeodesicParams b = geodesic_params(kind, geodesic_point(kind, g));
      const double err =
          std::max({angular_distance(b.u, g.u), std::abs(b.v - g.v), std::abs(b.tau - g.tau)});
      worst = std::max(worst, err);
      if (err > 1e-9) {
        ++over;
        if (err <= 1e-9 + roundtrip_rounding_bound(kind, g)) ++over_explained;
      }
    }
    if (over > 0) {
      o.pass = false;
      o.notes.push_back(fmtv(
          "%s: %d of 1000 trials exceed 1e-9 (max %.2e); %d of them lie within the error that rounding "
          "the model point to double precision already causes (planar arc tau cos v above ~8.7)",
          std::string(geometry_label(kind)).c_str(), over, worst, over_explained));
    }
    o.detail += fmtv("%s%s tau<=%g max err %.2e", o.detail.empty() ? "" : ", ",
                     std::string(geometry_label(kind)).c_str(), tau_max, worst);
  }
  return o;
}

Outcome oracle() {
  Outcome o;
  double worst = 0.0, drift = 0.0;
  for (auto kind : {S2R, H2R}) {
    sampling::Rng rng(42);
    for (int i = 0; i < 100; ++i) {
      const GeodesicParams g = sampling::random_params(kind, rng, 2.0);
      const GeodesicIntegration sol = integrate_geodesic(kind, g, 100);
      const Eigen::Vector3d diff = sol.points.back().spatial() - geodesic_point(kind, g).spatial();
      worst = std::max(worst, diff.lpNorm<Eigen::Infinity>());
      drift = std::max(drift, sol.max_speed_drift);
    }
  }
  o.pass = worst <= 1e-6 && drift <= 1e-8;
  o.detail = fmtv("max endpoint error %.2e (tol 1e-6), max speed drift %.2e (tol 1e-8)", worst, drift);
  return o;
}

Outcome isometry() {
  Outcome o;
  double dist = 0.0;
  for (auto kind : {S2R, H2R}) {
    sampling::Rng rng(42);
    for (int i = 0; i < 200; ++i) {
      const ModelPoint p = sampling::random_point(kind, rng);
      const ModelPoint q = sampling::random_point(kind, rng);
      const IsometryMatrix m = to_origin(kind, sampling::random_point(kind, rng));
      dist = std::max(dist, std::abs(distance(kind, p, q) - distance(kind, apply(m, p), apply(m, q))));
    }
  }

  // Entrywise comparison with the printed S2xR matrix. An entry that
  // disagrees is reported; it is accepted only if it is the negation of the
  // composed entry, a sign slip in print.
  sampling::Rng rng(43);
  double matched = 0.0, flipped = 0.0;
  double off[4][4] = {};
  for (int i = 0; i < 200; ++i) {
    const ModelPoint a = sampling::random_point(S2R, rng);
    const Eigen::Matrix4d ours = to_origin(S2R, a).matrix();
    const Eigen::Matrix4d printed = printed_sphere_to_origin(a);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) off[r][c] = std::max(off[r][c], std::abs(ours(r, c) - printed(r, c)));
    flipped = std::max(flipped, std::abs(ours(3, 2) + printed(3, 2)));
  }
  static const char* axis[] = {"x0", "x", "y", "z"};
  int discrepant = 0;
  bool only_sign_slip = true;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (off[r][c] <= 1e-9) {
        matched = std::max(matched, off[r][c]);
        continue;
      }
      ++discrepant;
      only_sign_slip = only_sign_slip && r == 3 && c == 2 && flipped <= 1e-9;
      o.notes.push_back(fmtv("printed S2xR matrix entry (%s, %s) differs from the composition by up to %.2e; "
                             "negating it matches within %.2e and makes the (y, z) block symmetric",
                             axis[r], axis[c], off[r][c], r == 3 && c == 2 ? flipped : off[r][c]));
    }
  }

  // Closed-form vertex images on random configurations with A3 in the [x, y] plane.
  double images = 0.0;
  for (auto kind : {S2R, H2R}) {
    sampling::Rng r2(44);
    for (int i = 0; i < 200; ++i) {
      const ModelPoint a2 = sampling::random_point(kind, r2);
      ModelPoint a3 = sampling::random_point(kind, r2);
      a3 = ModelPoint(a3.x(), std::hypot(a3.y(), a3.z()) * (a3.y() < 0 ? -1 : 1), 0.0);
      const ClosedFormImages img = closed_form_images(kind, a2, a3);
      const IsometryMatrix m2 = to_origin(kind, a2), m3 = to_origin(kind, a3);
      auto err = [](const ModelPoint& a, const ModelPoint& b) {
        return (a.spatial() - b.spatial()).lpNorm<Eigen::Infinity>() /
               std::max(1.0, b.spatial().lpNorm<Eigen::Infinity>());
      };
      images = std::max({images, err(img.a1_under_a2, apply(m2, base_point())), err(img.a3_under_a2, apply(m2, a3)),
                         err(img.a1_under_a3, apply(m3, base_point())), err(img.a2_under_a3, apply(m3, a2))});
    }
  }

  o.pass = dist <= 1e-8 && matched <= 1e-9 && images <= 1e-9 && only_sign_slip;
  o.detail = fmtv("distance drift %.2e (tol 1e-8), matrix %d/16 entries within %.2e, %d reported, "
                  "closed-form images %.2e (tol 1e-9)",
                  dist, 16 - discrepant, matched, discrepant, images);
  return o;
}

Outcome limits() {
  Outcome o;
  o.pass = true;
  for (const SweepSpec& spec : {sphere_family(), hyperbolic_family()}) {
    const double side = spec.kind == S2R ? 1.0 : -1.0;
    const double near = sweep_sum(spec, 1e-3) - kPi;
    bool monotone = true, correct_side = near * side > 0;
    double prev = INFINITY, first = 0.0, last = 0.0;
    for (int i = 0; i <= 64; ++i) {
      const double t = 100.0 * std::pow(10.0, i / 64.0);
      const double gap = (sweep_sum(spec, t) - kPi) * side;
      if (i == 0) first = gap;
      last = gap;
      correct_side = correct_side && gap > 0;
      monotone = monotone && gap < prev;
      prev = gap;
    }
    o.pass = o.pass && std::abs(near) <= 0.05 && monotone && correct_side;
    o.detail += fmtv("%s%s S(1e-3) - pi = %+.4f, tail |S - pi| %.5f -> %.5f %s", o.detail.empty() ? "" : "; ",
                     std::string(geometry_label(spec.kind)).c_str(), near, first, last,
                     monotone ? "monotone" : "NOT monotone");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Table 1 reproduction", [] { return table(1, 1.0); }},
      {2, "Table 2 reproduction", [] { return table(2, 1.0); }},
      {3, "S2xR sweep maximum", [] { return sweep_extremum(sphere_family(), 0.19316, 3.17450, ExtremumKind::Maximum); }},
      {4, "H2xR sweep minimum",
       [] { return sweep_extremum(hyperbolic_family(), 0.36392, 3.03236, ExtremumKind::Minimum); }},
      {5, "Angle-sum trichotomy", trichotomy},
      {6, "Inverse-geodesic roundtrip", roundtrip},
      {7, "ODE oracle equivalence", oracle},
      {8, "Isometry contract", isometry},
      {9, "Limit behaviour", limits},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %d. %-28s %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    for (const std::string& n : o.notes) std::printf("        note: %s\n", n.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
