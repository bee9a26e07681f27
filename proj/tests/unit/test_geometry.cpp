#include <doctest.h>

#include <cmath>
#include <numbers>

#include "reference.hpp"
#include "thurston/errors.hpp"
#include "thurston/geometry.hpp"

using namespace thurston;

namespace {
constexpr auto S2R = GeometryKind::SphereTimesR;
constexpr auto H2R = GeometryKind::HyperbolicTimesR;
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("membership") {
  CHECK(contains(S2R, ModelPoint(3, -2, 1)));
  CHECK_FALSE(contains(S2R, ModelPoint(0, 0, 0)));
  CHECK(contains(S2R, ModelPoint(-1, 0, 0)));

  CHECK(contains(H2R, ModelPoint(2, 1.5, 1)));
  CHECK_FALSE(contains(H2R, ModelPoint(1, 1, 0)));    // on the cone
  CHECK_FALSE(contains(H2R, ModelPoint(-2, 0, 0)));   // wrong nappe
  CHECK_FALSE(contains(H2R, ModelPoint(0.5, 1, 0)));

  CHECK_FALSE(contains(S2R, std::array<double, 4>{0, 1, 0, 0}));
  CHECK_FALSE(contains(H2R, std::array<double, 4>{-1, -2, 0, 0}));
  CHECK(contains(H2R, std::array<double, 4>{2, 4, 3, 2}));
}

TEST_CASE("homogeneous normalization") {
  const ModelPoint p = ModelPoint::from_homogeneous({2, 4, 3, 2});
  CHECK(p.x() == doctest::Approx(2));
  CHECK(p.y() == doctest::Approx(1.5));
  CHECK(p.z() == doctest::Approx(1));
  CHECK_THROWS_AS(ModelPoint::from_homogeneous({0, 1, 0, 0}), DomainError);
  CHECK_THROWS_AS(ModelPoint::from_homogeneous({-1, 1, 0, 0}), DomainError);
}

TEST_CASE("require_member") {
  CHECK_THROWS_AS(require_member(S2R, ModelPoint(0, 0, 0)), DomainError);
  CHECK_THROWS_AS(require_member(H2R, ModelPoint(1, 2, 0)), DomainError);
  CHECK_NOTHROW(require_member(H2R, ModelPoint(1, 0, 0)));
}

TEST_CASE("metric is euclidean at the base point") {
  for (auto kind : {S2R, H2R}) {
    const Eigen::Matrix3d g = metric_at(kind, base_point()).g;
    CHECK((g - Eigen::Matrix3d::Identity()).norm() < 1e-14);
  }
}

TEST_CASE("sphere metric agrees with the intrinsic chart") {
  for (const Eigen::Vector3d p : {Eigen::Vector3d(3, -2, 1), Eigen::Vector3d(0.2, 0.1, -0.4),
                                  Eigen::Vector3d(-5, 1, 2)}) {
    const Eigen::Matrix3d g = metric_at(S2R, ModelPoint(p)).g;
    const Eigen::Matrix3d ref = reference::sphere_metric_numeric(p);
    CHECK((g - ref).norm() / ref.norm() < 1e-7);
  }
}

TEST_CASE("hyperbolic metric agrees with the Lorentz form") {
  for (const Eigen::Vector3d p : {Eigen::Vector3d(2, 1.5, 1), Eigen::Vector3d(3, -1, 0),
                                  Eigen::Vector3d(1.1, 0.2, -0.3), Eigen::Vector3d(40, 30, 20)}) {
    const Eigen::Matrix3d g = metric_at(H2R, ModelPoint(p)).g;
    const Eigen::Matrix3d ref = reference::hyperbolic_metric_lorentz(p);
    CHECK((g - ref).norm() / ref.norm() < 1e-12);
    CHECK(g.isApprox(g.transpose()));
    CHECK(Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(g).eigenvalues().minCoeff() > 0);
  }
}

TEST_CASE("metric outside the model") {
  CHECK_THROWS_AS(metric_at(S2R, ModelPoint(0, 0, 0)), DomainError);
  CHECK_THROWS_AS(metric_at(H2R, ModelPoint(1, 2, 0)), DomainError);
}

TEST_CASE("intrinsic coordinates") {
  const ModelPoint p = to_model(SphereCoords{0.0, kPi / 2, 0.0});
  CHECK(p.x() == doctest::Approx(0).epsilon(1e-15));
  CHECK(p.y() == doctest::Approx(1));

  const ModelPoint h = to_model(HyperbolicCoords{0.0, 1.0, 0.0});
  CHECK(h.x() == doctest::Approx(std::cosh(1.0)));
  CHECK(h.y() == doctest::Approx(std::sinh(1.0)));

  const ModelPoint f = to_model(SphereCoords{1.0, 0.0, 0.0});
  CHECK(f.x() == doctest::Approx(std::exp(1.0)));

  for (const ModelPoint& q : {ModelPoint(3, -2, 1), ModelPoint(-0.5, 0.25, 2)}) {
    CHECK(nearly_equal(to_model(to_sphere_coords(q)), q, 1e-13));
  }
  for (const ModelPoint& q : {ModelPoint(2, 1.5, 1), ModelPoint(3, -1, 0.5)}) {
    CHECK(nearly_equal(to_model(to_hyperbolic_coords(q)), q, 1e-13));
  }

  CHECK_THROWS_AS(to_model(S2R, HyperbolicCoords{0, 1, 0}), PrecondError);
  CHECK_THROWS_AS(to_model(S2R, SphereCoords{0, 0, 2.0}), PrecondError);
  CHECK_THROWS_AS(to_model(H2R, HyperbolicCoords{0, -1, 0}), PrecondError);
}
