#include "thurston/isometry.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/LU>

#include "thurston/errors.hpp"
#include "thurston/numerics.hpp"

namespace thurston {

namespace {

// Q of the fibre coordinate: x^2+y^2+z^2 resp. x^2-y^2-z^2.
double fibre_norm2(GeometryKind kind, const ModelPoint& a) {
  const double rho2 = a.y() * a.y() + a.z() * a.z();
  if (kind == GeometryKind::SphereTimesR) return a.x() * a.x() + rho2;
  const double rho = std::sqrt(rho2);
  return (a.x() - rho) * (a.x() + rho);
}

}  // namespace

IsometryMatrix::IsometryMatrix(const Eigen::Matrix4d& m) {
  if (!(m(0, 0) > 0.0)) throw DegenerateError("isometry matrix must keep x0 positive");
  m_ = m / m(0, 0);
}

IsometryMatrix IsometryMatrix::then(const IsometryMatrix& next) const {
  return IsometryMatrix(m_ * next.m_);
}

IsometryMatrix IsometryMatrix::inverse() const { return IsometryMatrix(Eigen::Matrix4d(m_.inverse())); }

IsometryMatrix fibre_translation(GeometryKind kind, const ModelPoint& a) {
  require_member(kind, a);
  const double s = 1.0 / std::sqrt(fibre_norm2(kind, a));
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(1, 1) = m(2, 2) = m(3, 3) = s;
  return IsometryMatrix(m);
}

IsometryMatrix rotation_x(GeometryKind /*kind*/, const ModelPoint& p) {
  // The x axis is fixed by both geometries, so the same Euclidean rotation works.
  const double rho = std::hypot(p.y(), p.z());
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  if (rho == 0.0) return IsometryMatrix(m);
  const double c = p.y() / rho, s = p.z() / rho;
  m(2, 2) = c;
  m(2, 3) = -s;
  m(3, 2) = s;
  m(3, 3) = c;
  return IsometryMatrix(m);
}

IsometryMatrix rotation_z(GeometryKind kind, const ModelPoint& p) {
  const double tol = default_numerics().precondition;
  const double scale = std::max(1.0, p.spatial().lpNorm<Eigen::Infinity>());
  if (std::abs(p.z()) > tol * scale) {
    std::ostringstream os;
    os << "rotation_z needs a point in the [x, y] plane, got z = " << p.z();
    throw PrecondError(os.str());
  }
  const double q = kind == GeometryKind::SphereTimesR ? p.x() * p.x() + p.y() * p.y()
                                                      : (p.x() - p.y()) * (p.x() + p.y());
  if (!(std::abs(q - 1.0) <= 10.0 * tol * scale * scale)) {
    throw PrecondError("rotation_z needs a point with zero fibre coordinate");
  }
  if (kind == GeometryKind::HyperbolicTimesR && !(p.x() > 0.0)) {
    throw PrecondError("rotation_z needs a point of the upper sheet");
  }
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  const double c = p.x(), s = p.y();
  if (kind == GeometryKind::SphereTimesR) {
    // [x y] R = [1 0] for x^2 + y^2 = 1.
    m(1, 1) = c;
    m(1, 2) = -s;
    m(2, 1) = s;
    m(2, 2) = c;
  } else {
    // Boost with [x y] B = [1 0] for x^2 - y^2 = 1.
    m(1, 1) = c;
    m(1, 2) = -s;
    m(2, 1) = -s;
    m(2, 2) = c;
  }
  return IsometryMatrix(m);
}

IsometryMatrix to_origin(GeometryKind kind, const ModelPoint& a) {
  require_member(kind, a);
  if (a == base_point()) return IsometryMatrix();
  const IsometryMatrix t = fibre_translation(kind, a);
  const ModelPoint at = apply(t, a);
  const IsometryMatrix rx = rotation_x(kind, at);
  ModelPoint atr = apply(rx, at);
  // Rounding leaves |z| ~ 1e-17 and Q ~ 1 +- 1e-16; pin the exact values
  // rotation_z is specified on.
  double x = atr.x(), y = atr.y();
  const double q = kind == GeometryKind::SphereTimesR ? x * x + y * y : (x - y) * (x + y);
  const double n = std::sqrt(q);
  atr = ModelPoint(x / n, y / n, 0.0);
  const IsometryMatrix rz = rotation_z(kind, atr);
  return t.then(rx).then(rz).then(rx.inverse());
}

ModelPoint apply(const IsometryMatrix& m, const ModelPoint& p) {
  const Eigen::RowVector4d row(1.0, p.x(), p.y(), p.z());
  const Eigen::RowVector4d image = row * m.matrix();
  if (!(image[0] > 0.0)) throw DegenerateError("isometry image has non-positive x0");
  return ModelPoint(image[1] / image[0], image[2] / image[0], image[3] / image[0]);
}

ClosedFormImages closed_form_images(GeometryKind kind, const ModelPoint& a2, const ModelPoint& a3) {
  require_member(kind, a2, "A2");
  require_member(kind, a3, "A3");
  if (a3.z() != 0.0) throw PrecondError("closed-form images assume A3 in the [x, y] plane");
  const double x2 = a2.x(), y2 = a2.y(), z2 = a2.z();
  const double x3 = a3.x(), y3 = a3.y();
  const double yz2 = y2 * y2 + z2 * z2;
  if (yz2 == 0.0) throw PrecondError("closed-form images assume A2 off the x axis");

  const bool sphere = kind == GeometryKind::SphereTimesR;
  const double sgn = sphere ? 1.0 : -1.0;  // sign of the y, z terms in Q
  const double q2 = x2 * x2 + sgn * yz2;
  const double q3 = x3 * x3 + sgn * y3 * y3;
  const double r2 = std::sqrt(q2);

  ClosedFormImages out;
  out.a1_under_a2 = ModelPoint(x2 / q2, -y2 / q2, -z2 / q2);
  out.a3_under_a2 = ModelPoint(
      (x2 * x3 + sgn * y2 * y3) / q2,
      (y3 * z2 * z2 * r2 + x2 * y2 * y2 * y3 - x3 * y2 * y2 * y2 - x3 * y2 * z2 * z2) / (yz2 * q2),
      -(z2 * (y3 * y2 * (r2 - x2) + x3 * y2 * y2 + x3 * z2 * z2)) / (yz2 * q2));
  out.a1_under_a3 = ModelPoint(x3 / q3, -y3 / q3, 0.0);
  out.a2_under_a3 = ModelPoint((x2 * x3 + sgn * y2 * y3) / q3, (x3 * y2 - x2 * y3) / q3,
                               z2 / std::sqrt(q3));
  return out;
}

Eigen::Matrix4d printed_sphere_to_origin(const ModelPoint& a) {
  const double x = a.x(), y = a.y(), z = a.z();
  const double q = x * x + y * y + z * z;
  const double r = std::sqrt(q);
  const double yz = y * y + z * z;
  if (yz == 0.0) throw PrecondError("printed matrix is undefined on the x axis");
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = x / q;
  m(1, 2) = -y / q;
  m(1, 3) = -z / q;
  m(2, 1) = y / q;
  m(2, 2) = (y * y * x + z * z * r) / (q * yz);
  m(2, 3) = -y * z * (-x + r) / (q * yz);
  m(3, 1) = z / q;
  m(3, 2) = y * z * (-x + r) / (q * yz);
  m(3, 3) = (z * z * x + y * y * r) / (q * yz);
  return m;
}

}  // namespace thurston
