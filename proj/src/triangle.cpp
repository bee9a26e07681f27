#include "thurston/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Geometry>
#include <Eigen/LU>

#include "thurston/errors.hpp"
#include "thurston/isometry.hpp"

namespace thurston {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector3d direction_towards(GeometryKind kind, const ModelPoint& p) {
  return tangent_of(geodesic_params(kind, p)).vec();
}

double unit_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return std::acos(std::clamp(a.dot(b), -1.0, 1.0));
}

}  // namespace

std::string_view angle_sum_class_name(AngleSumClass c) noexcept {
  switch (c) {
    case AngleSumClass::SumEqualsPi: return "equal";
    case AngleSumClass::SumAbovePi: return "above";
    case AngleSumClass::SumBelowPi: return "below";
  }
  return "unknown";
}

GeodesicTriangle::GeodesicTriangle(GeometryKind kind, const ModelPoint& a1, const ModelPoint& a2,
                                   const ModelPoint& a3)
    : kind_(kind) {
  require_member(kind, a1, "A1");
  require_member(kind, a2, "A2");
  require_member(kind, a3, "A3");
  const IsometryMatrix m = to_origin(kind, a1);
  v_ = {base_point(), apply(m, a2), apply(m, a3)};
  const double tol = default_numerics().coordinate;
  if (nearly_equal(v_[1], v_[0], tol) || nearly_equal(v_[2], v_[0], tol) ||
      nearly_equal(v_[1], v_[2], tol)) {
    throw DegenerateError("triangle has coincident vertices");
  }
}

const ModelPoint& GeodesicTriangle::vertex(int i) const {
  if (i < 1 || i > 3) throw PrecondError("vertex index must be 1, 2 or 3");
  return v_[static_cast<std::size_t>(i - 1)];
}

std::array<TangentEndpoint, 6> tangent_endpoints(const GeodesicTriangle& tri) {
  const GeometryKind k = tri.kind();
  const ModelPoint& a1 = tri.vertex(1);
  const ModelPoint& a2 = tri.vertex(2);
  const ModelPoint& a3 = tri.vertex(3);
  const IsometryMatrix m2 = to_origin(k, a2);
  const IsometryMatrix m3 = to_origin(k, a3);
  auto endpoint = [k](int i, int j, const ModelPoint& target) {
    return TangentEndpoint{i, j, tangent_of(geodesic_params(k, target))};
  };
  return {endpoint(1, 3, apply(m3, a1)), endpoint(1, 2, apply(m2, a1)),
          endpoint(2, 3, apply(m3, a2)), endpoint(3, 2, apply(m2, a3)),
          endpoint(3, 0, a3),            endpoint(2, 0, a2)};
}

AntipodalResiduals antipodal_residuals(const GeodesicTriangle& tri) {
  const auto t = tangent_endpoints(tri);
  // Order: t13, t12, t23, t32, t30, t20.
  AntipodalResiduals r;
  r.side12 = (t[5].vec.vec() + t[1].vec.vec()).norm();
  r.side13 = (t[4].vec.vec() + t[0].vec.vec()).norm();
  r.side23 = (t[3].vec.vec() + t[2].vec.vec()).norm();
  return r;
}

double vertex_angle(const GeodesicTriangle& tri, int i) {
  const GeometryKind k = tri.kind();
  switch (i) {
    case 1:
      return unit_angle(direction_towards(k, tri.vertex(2)), direction_towards(k, tri.vertex(3)));
    case 2: {
      const IsometryMatrix m = to_origin(k, tri.vertex(2));
      return unit_angle(direction_towards(k, apply(m, tri.vertex(1))),
                        direction_towards(k, apply(m, tri.vertex(3))));
    }
    case 3: {
      const IsometryMatrix m = to_origin(k, tri.vertex(3));
      return unit_angle(direction_towards(k, apply(m, tri.vertex(1))),
                        direction_towards(k, apply(m, tri.vertex(2))));
    }
    default:
      throw PrecondError("vertex index must be 1, 2 or 3");
  }
}

TriangleAngles angle_sum(const GeodesicTriangle& tri) {
  TriangleAngles a;
  a.w1 = vertex_angle(tri, 1);
  a.w2 = vertex_angle(tri, 2);
  a.w3 = vertex_angle(tri, 3);
  a.sum = a.w1 + a.w2 + a.w3;
  return a;
}

bool coplanar_with_center(const GeodesicTriangle& tri, const NumericsProfile& num) {
  Eigen::Matrix3d m;
  m.row(0) = tri.vertex(1).spatial();
  m.row(1) = tri.vertex(2).spatial();
  m.row(2) = tri.vertex(3).spatial();
  const double scale = m.row(0).norm() * m.row(1).norm() * m.row(2).norm();
  return std::abs(m.determinant()) <= num.coplanarity * scale;
}

bool winds_around_fibre(const GeodesicTriangle& tri) {
  if (tri.kind() != GeometryKind::SphereTimesR) return false;
  // Angles of the vertex directions inside the plane through E0 and A1 = e1.
  const Eigen::Vector3d e = Eigen::Vector3d::UnitX();
  Eigen::Vector3d f = Eigen::Vector3d::Zero();
  for (int i = 2; i <= 3; ++i) {
    Eigen::Vector3d w = tri.vertex(i).spatial().normalized();
    w -= w.dot(e) * e;
    if (w.norm() > f.norm()) f = w;
  }
  if (f.norm() == 0.0) return false;  // all directions on one line
  f.normalize();
  std::array<double, 3> ang{};
  for (int i = 1; i <= 3; ++i) {
    const Eigen::Vector3d w = tri.vertex(i).spatial();
    ang[static_cast<std::size_t>(i - 1)] = std::atan2(w.dot(f), w.dot(e));
  }
  std::sort(ang.begin(), ang.end());
  const double largest_gap =
      std::max({ang[1] - ang[0], ang[2] - ang[1], 2.0 * kPi - (ang[2] - ang[0])});
  return largest_gap < kPi;
}

AngleSumClass classify(const GeodesicTriangle& tri, const NumericsProfile& num) {
  const TriangleAngles a = angle_sum(tri);
  AngleSumClass c;
  if (coplanar_with_center(tri, num) && !winds_around_fibre(tri)) {
    c = AngleSumClass::SumEqualsPi;
  } else if (tri.kind() == GeometryKind::SphereTimesR) {
    c = AngleSumClass::SumAbovePi;
  } else {
    c = AngleSumClass::SumBelowPi;
  }
  const double d = a.sum - kPi;
  const bool ok = (c == AngleSumClass::SumEqualsPi && std::abs(d) <= num.classification) ||
                  (c == AngleSumClass::SumAbovePi && d >= -num.classification) ||
                  (c == AngleSumClass::SumBelowPi && d <= num.classification);
  if (!ok) {
    std::ostringstream os;
    os.precision(17);
    os << "angle sum " << a.sum << " contradicts class '" << angle_sum_class_name(c) << "'";
    throw ConsistencyError(os.str());
  }
  return c;
}

}  // namespace thurston
