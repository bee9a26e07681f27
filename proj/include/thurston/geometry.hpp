#pragma once

#include <array>
#include <string_view>
#include <variant>

#include <Eigen/Core>

namespace thurston {

enum class GeometryKind { SphereTimesR, HyperbolicTimesR };

std::string_view geometry_name(GeometryKind kind) noexcept;  // "s2r" / "h2r"
std::string_view geometry_label(GeometryKind kind) noexcept;  // "S2xR" / "H2xR"

// Point of the affine chart x0 = 1 of the projective model. Construction only
// normalizes; membership in a particular geometry is checked by contains().
class ModelPoint {
 public:
  ModelPoint() = default;
  ModelPoint(double x, double y, double z) : xyz_(x, y, z) {}
  explicit ModelPoint(const Eigen::Vector3d& xyz) : xyz_(xyz) {}

  // Throws DomainError unless x0 > 0.
  static ModelPoint from_homogeneous(const std::array<double, 4>& h);

  double x() const { return xyz_.x(); }
  double y() const { return xyz_.y(); }
  double z() const { return xyz_.z(); }
  const Eigen::Vector3d& spatial() const { return xyz_; }
  std::array<double, 4> homogeneous() const { return {1.0, x(), y(), z()}; }

  bool operator==(const ModelPoint& other) const { return xyz_ == other.xyz_; }

 private:
  Eigen::Vector3d xyz_ = Eigen::Vector3d::Zero();
};

// The point (1,1,0,0) every geodesic parametrization starts from.
inline ModelPoint base_point() { return ModelPoint(1.0, 0.0, 0.0); }

// Component-wise |a - b| <= tol * max(1, |a|, |b|).
bool nearly_equal(const ModelPoint& a, const ModelPoint& b, double tol);

struct MetricTensor {
  Eigen::Matrix3d g;

  double quadratic(const Eigen::Vector3d& h) const { return h.dot(g * h); }
  double inner(const Eigen::Vector3d& a, const Eigen::Vector3d& b) const { return a.dot(g * b); }
};

// Fibre t, longitude phi in (-pi, pi], latitude theta in [-pi/2, pi/2].
struct SphereCoords {
  double t = 0.0;
  double phi = 0.0;
  double theta = 0.0;
};

// Fibre t, radius r >= 0, angle alpha in (-pi, pi].
struct HyperbolicCoords {
  double t = 0.0;
  double r = 0.0;
  double alpha = 0.0;
};

using IntrinsicCoords = std::variant<SphereCoords, HyperbolicCoords>;

bool contains(GeometryKind kind, const std::array<double, 4>& homogeneous);
bool contains(GeometryKind kind, const ModelPoint& p);

// Throws DomainError when !contains(kind, p).
void require_member(GeometryKind kind, const ModelPoint& p, std::string_view what = "point");

// Ambient metric in the Cartesian chart dx, dy, dz.
MetricTensor metric_at(GeometryKind kind, const ModelPoint& p);

ModelPoint to_model(const SphereCoords& c);
ModelPoint to_model(const HyperbolicCoords& c);
// PrecondError if the coordinate variant does not match kind or is out of range.
ModelPoint to_model(GeometryKind kind, const IntrinsicCoords& c);

SphereCoords to_sphere_coords(const ModelPoint& p);
HyperbolicCoords to_hyperbolic_coords(const ModelPoint& p);

}  // namespace thurston
