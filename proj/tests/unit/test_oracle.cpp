#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "thurston/errors.hpp"
#include "thurston/geodesic.hpp"
#include "thurston/oracle.hpp"
#include "thurston/sampling.hpp"

using namespace thurston;

namespace {
constexpr auto S2R = GeometryKind::SphereTimesR;
constexpr auto H2R = GeometryKind::HyperbolicTimesR;
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("integrated fibre line") {
  for (auto kind : {S2R, H2R}) {
    const GeodesicIntegration sol = integrate_geodesic(kind, {0.4, kPi / 2, 2.0}, 100);
    CHECK(sol.points.size() == 101);
    for (std::size_t i = 0; i < sol.points.size(); ++i) {
      const double s = 2.0 * static_cast<double>(i) / 100.0;
      CHECK(nearly_equal(sol.points[i], ModelPoint(std::exp(s), 0, 0), 1e-9));
    }
  }
}

TEST_CASE("integrated hyperbola") {
  const GeodesicIntegration sol = integrate_geodesic(H2R, {0, 0, 1}, 100);
  CHECK(nearly_equal(sol.points.back(), ModelPoint(std::cosh(1.0), std::sinh(1.0), 0), 1e-6));
}

TEST_CASE("integration matches the closed form") {
  for (auto kind : {S2R, H2R}) {
    sampling::Rng rng(21);
    for (int i = 0; i < 100; ++i) {
      const GeodesicParams g = sampling::random_params(kind, rng, 2.0);
      const GeodesicIntegration sol = integrate_geodesic(kind, g, 100);
      CHECK(nearly_equal(sol.points.back(), geodesic_point(kind, g), 1e-6));
      CHECK(sol.max_speed_drift <= 1e-8);
      for (const ODEState& st : sol.states) CHECK(std::abs(st.speed_defect(kind)) <= 1e-8);
    }
  }
}

TEST_CASE("integration preconditions") {
  CHECK_THROWS_AS(integrate_geodesic(S2R, {0, 0, 11}, 100), PrecondError);
  CHECK_THROWS_AS(integrate_geodesic(S2R, {0, 0, 1}, 99), PrecondError);
}

TEST_CASE("arc length of a fibre segment") {
  std::vector<ModelPoint> pts;
  for (int i = 0; i < 1000; ++i) pts.emplace_back(std::exp(i / 999.0), 0, 0);
  CHECK(std::abs(arc_length_quadrature(S2R, pts) - 1.0) < 1e-6);
  CHECK(std::abs(arc_length_quadrature(H2R, pts) - 1.0) < 1e-6);
}

TEST_CASE("arc length of a quarter circle") {
  const auto pts = sample_curve(S2R, {0, 0, kPi / 2}, 1000);
  CHECK(std::abs(arc_length_quadrature(S2R, pts) - kPi / 2) < 1e-6);
}

TEST_CASE("arc length converges") {
  for (auto kind : {S2R, H2R}) {
    const GeodesicParams g{0.3, 0.4, 2.0};
    double prev = std::abs(arc_length_quadrature(kind, sample_curve(kind, g, 9)) - g.tau);
    for (std::size_t n : {17u, 33u, 65u}) {
      const double err = std::abs(arc_length_quadrature(kind, sample_curve(kind, g, n)) - g.tau);
      CHECK(err * 4 <= prev);
      prev = err;
    }
  }
}

TEST_CASE("arc length of sampled curves tends to tau") {
  sampling::Rng rng(22);
  for (auto kind : {S2R, H2R}) {
    for (int i = 0; i < 20; ++i) {
      const GeodesicParams g = sampling::random_params(kind, rng, 3.0);
      CHECK(std::abs(arc_length_quadrature(kind, sample_curve(kind, g, 400)) - g.tau) < 1e-6);
    }
  }
}

TEST_CASE("arc length input checks") {
  const std::vector<ModelPoint> one{base_point()};
  CHECK_THROWS_AS(arc_length_quadrature(S2R, one), PrecondError);
  const std::vector<ModelPoint> bad{base_point(), ModelPoint(1, 2, 0)};
  CHECK_THROWS_AS(arc_length_quadrature(H2R, bad), DomainError);
}
