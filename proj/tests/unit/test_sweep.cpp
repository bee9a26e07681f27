#include <doctest.h>

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "thurston/errors.hpp"
#include "thurston/sweep.hpp"

using namespace thurston;

namespace {
constexpr double kPi = std::numbers::pi;

SweepSpec sphere_family() {
  SweepSpec s;
  s.kind = GeometryKind::SphereTimesR;
  s.a2 = ModelPoint(3, -2, 1);
  s.ray = Eigen::Vector3d(2, 1, 0);
  return s;
}

SweepSpec hyperbolic_family() {
  SweepSpec s;
  s.kind = GeometryKind::HyperbolicTimesR;
  s.a2 = ModelPoint(2, 1.5, 1);
  s.ray = Eigen::Vector3d(3, -1, 0);
  return s;
}

int derivative_sign_changes(const SweepResult& r) {
  int changes = 0, last = 0;
  for (std::size_t i = 1; i < r.series.size(); ++i) {
    const double d = r.series[i].second - r.series[i - 1].second;
    const int sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (sign != 0 && last != 0 && sign != last) ++changes;
    if (sign != 0) last = sign;
  }
  return changes;
}
}  // namespace

TEST_CASE("sphere family has a single maximum") {
  const SweepResult r = evaluate(sphere_family());
  CHECK(r.series.size() == 512);
  CHECK(r.extremum_kind == ExtremumKind::Maximum);
  CHECK(std::abs(r.t_extremum - 0.19316) < 1e-3);
  CHECK(std::abs(r.s_extremum - 3.17450) < 1e-3);
  CHECK(derivative_sign_changes(r) == 1);
  for (const auto& [t, s] : r.series) CHECK(s >= kPi - 1e-9);
  for (double dt : {-1e-4, 1e-4}) CHECK(sweep_sum(sphere_family(), r.t_extremum + dt) <= r.s_extremum);
}

TEST_CASE("hyperbolic family has a single minimum") {
  const SweepResult r = evaluate(hyperbolic_family());
  CHECK(r.extremum_kind == ExtremumKind::Minimum);
  CHECK(std::abs(r.t_extremum - 0.36392) < 1e-3);
  CHECK(std::abs(r.s_extremum - 3.03236) < 1e-3);
  CHECK(derivative_sign_changes(r) == 1);
  for (const auto& [t, s] : r.series) CHECK(s <= kPi + 1e-9);
  for (double dt : {-1e-4, 1e-4}) CHECK(sweep_sum(hyperbolic_family(), r.t_extremum + dt) >= r.s_extremum);
}

TEST_CASE("coplanar family is flat") {
  SweepSpec s = sphere_family();
  s.a2 = ModelPoint(3, -2, 0);
  const SweepResult r = evaluate(s);
  CHECK(r.extremum_kind == ExtremumKind::Flat);
  CHECK(std::isnan(r.t_extremum));
  for (const auto& [t, v] : r.series) CHECK(std::abs(v - kPi) < 1e-9);
  const SweepLimits l = limits_check(s);
  CHECK(std::abs(l.s_near_zero - kPi) < 1e-8);
  CHECK(std::abs(l.s_near_infinity - kPi) < 1e-8);
}

TEST_CASE("limits approach pi") {
  const SweepLimits s = limits_check(sphere_family());
  CHECK(s.s_near_zero > kPi);
  CHECK(s.s_near_zero - kPi < 0.05);
  CHECK(s.s_near_infinity > kPi);
  const SweepLimits h = limits_check(hyperbolic_family());
  CHECK(h.s_near_zero < kPi);
  CHECK(kPi - h.s_near_zero < 0.05);
  CHECK(h.s_near_infinity < kPi);

  // Far along the ray the family matches the last published sphere row.
  CHECK(std::abs(sweep_sum(sphere_family(), 1000.0) - 3.14355) < 1e-4);
}

TEST_CASE("spec validation") {
  SweepSpec s = sphere_family();
  s.t_min = 2;
  s.t_max = 1;
  CHECK_THROWS_AS(validate(s), PrecondError);
  s = sphere_family();
  s.samples = 2;
  CHECK_THROWS_AS(validate(s), PrecondError);
  s = sphere_family();
  s.ray = Eigen::Vector3d::Zero();
  CHECK_THROWS_AS(validate(s), PrecondError);
  s = hyperbolic_family();
  s.ray = Eigen::Vector3d(1, 2, 0);
  CHECK_THROWS_AS(evaluate(s), DomainError);
}

TEST_CASE("csv and json output") {
  SweepSpec s = sphere_family();
  s.samples = 8;
  const SweepResult r = evaluate(s);
  const std::string csv = to_csv(r, 4);
  CHECK(csv.rfind("t,S_t\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
  CHECK(csv == to_csv(evaluate(s), 4));

  const std::string text = to_json(s, r);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["schema"] == "v1");
  CHECK(j["kind"] == "s2r");
  CHECK(j["extremum_kind"] == "maximum");
  CHECK(j["series"].size() == 8);

  const auto [spec2, r2] = sweep_from_json(text);
  CHECK(spec2.samples == 8);
  CHECK(spec2.a2 == s.a2);
  CHECK(r2.series == r.series);
  CHECK(r2.t_extremum == r.t_extremum);
  CHECK(to_json(spec2, r2) == text);

  CHECK_THROWS_AS(sweep_from_json("{\"schema\":\"v2\"}"), PrecondError);
  CHECK_THROWS_AS(sweep_from_json("not json"), PrecondError);
}

TEST_CASE("flat json has a null extremum location") {
  SweepSpec s = hyperbolic_family();
  s.a2 = ModelPoint(2, 1.5, 0);
  s.samples = 4;
  const auto j = nlohmann::json::parse(to_json(s, evaluate(s)));
  CHECK(j["t0"].is_null());
  CHECK(j["extremum_kind"] == "degenerate-flat");
}
