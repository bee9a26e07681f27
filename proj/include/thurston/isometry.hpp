#pragma once

#include <Eigen/Core>

#include "thurston/geometry.hpp"

namespace thurston {

// 4x4 homogeneous transform acting on row coordinates (p' = p * M), defined
// up to a positive factor and stored with M(0,0) = 1.
class IsometryMatrix {
 public:
  IsometryMatrix() : m_(Eigen::Matrix4d::Identity()) {}
  // Throws DegenerateError if m(0,0) is not positive.
  explicit IsometryMatrix(const Eigen::Matrix4d& m);

  const Eigen::Matrix4d& matrix() const { return m_; }

  // Apply *this first, then next.
  IsometryMatrix then(const IsometryMatrix& next) const;
  IsometryMatrix inverse() const;

 private:
  Eigen::Matrix4d m_;
};

// Scales the spatial part so the image of a has fibre coordinate zero.
IsometryMatrix fibre_translation(GeometryKind kind, const ModelPoint& a);

// Rotation about the x axis taking (y, z) of p to (sqrt(y^2 + z^2), 0).
// Identity when p lies on the x axis.
IsometryMatrix rotation_x(GeometryKind kind, const ModelPoint& p);

// For p with z = 0 and zero fibre coordinate: S2xR rotation resp. H2xR Lorentz
// boost of the (x, y) block taking p to the base point. PrecondError otherwise.
IsometryMatrix rotation_z(GeometryKind kind, const ModelPoint& p);

// Composite fibre_translation * rotation_x * rotation_z * rotation_x^-1 taking
// a to the base point.
IsometryMatrix to_origin(GeometryKind kind, const ModelPoint& a);

// Row action followed by renormalization to x0 = 1. DegenerateError if the
// image has x0 <= 0.
ModelPoint apply(const IsometryMatrix& m, const ModelPoint& p);

// Published closed forms for the images of the vertices of a triangle
// (1,1,0,0), a2, a3 under the maps taking a2 resp. a3 to the base point.
// They assume a3 lies in the [x, y] plane and a2 is off the x axis.
struct ClosedFormImages {
  ModelPoint a1_under_a2;
  ModelPoint a3_under_a2;
  ModelPoint a1_under_a3;
  ModelPoint a2_under_a3;
};

// PrecondError if a3.z() != 0 or a2 lies on the x axis.
ClosedFormImages closed_form_images(GeometryKind kind, const ModelPoint& a2, const ModelPoint& a3);

// The S2xR to-origin matrix exactly as printed for a point off the x axis.
Eigen::Matrix4d printed_sphere_to_origin(const ModelPoint& a);

}  // namespace thurston
