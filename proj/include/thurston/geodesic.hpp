#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "thurston/geometry.hpp"

namespace thurston {

// Unit-speed geodesic from the base point: direction angles (u, v) and arc
// length tau. u in (-pi, pi], v in [-pi/2, pi/2], tau >= 0.
struct GeodesicParams {
  double u = 0.0;
  double v = 0.0;
  double tau = 0.0;
};

// Euclidean unit tangent at the base point.
struct TangentVector {
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;

  Eigen::Vector3d vec() const { return {dx, dy, dz}; }
};

// Which branch of the inverse problem a target point falls into.
enum class InverseCase {
  Generic,        // (y, z) != 0, off the unit sphere / unit sheet
  UnitNorm,       // (y, z) != 0 on the fibre-zero level: v = 0
  FibreAxis,      // y = z = 0, x > 0: pure fibre motion
  OppositeAxis,   // S2xR only: y = z = 0, x < 0 (direction is arbitrary, u = 0)
};

std::string_view inverse_case_name(InverseCase c) noexcept;

// PrecondError on out-of-range parameters.
void validate(const GeodesicParams& g);

ModelPoint geodesic_point(GeometryKind kind, const GeodesicParams& g);

InverseCase inverse_case(GeometryKind kind, const ModelPoint& p);

// Inverse of geodesic_point. For S2xR the principal (shortest) branch is
// returned. DomainError for non-members and for the base point itself.
GeodesicParams geodesic_params(GeometryKind kind, const ModelPoint& p);

TangentVector tangent_of(const GeodesicParams& g);

double distance(GeometryKind kind, const ModelPoint& p1, const ModelPoint& p2);

// n >= 2 points at equal tau steps; first is the base point, last is
// geodesic_point(kind, g).
std::vector<ModelPoint> sample_curve(GeometryKind kind, const GeodesicParams& g, std::size_t n);

// Angular difference folded into [0, pi].
double angular_distance(double a, double b);

}  // namespace thurston
