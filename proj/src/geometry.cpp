#include "thurston/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "thurston/errors.hpp"

namespace thurston {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Degenerate: return "DegenerateError";
    case ErrorKind::Precondition: return "PrecondError";
    case ErrorKind::Consistency: return "ConsistencyError";
    case ErrorKind::Unreachable: return "UnreachableError";
    case ErrorKind::Singularity: return "SingularityError";
  }
  return "Error";
}

std::string_view geometry_name(GeometryKind kind) noexcept {
  return kind == GeometryKind::SphereTimesR ? "s2r" : "h2r";
}

std::string_view geometry_label(GeometryKind kind) noexcept {
  return kind == GeometryKind::SphereTimesR ? "S2xR" : "H2xR";
}

ModelPoint ModelPoint::from_homogeneous(const std::array<double, 4>& h) {
  if (!(h[0] > 0.0) || !std::isfinite(h[0])) {
    throw DomainError("homogeneous coordinate x0 must be positive");
  }
  return ModelPoint(h[1] / h[0], h[2] / h[0], h[3] / h[0]);
}

bool nearly_equal(const ModelPoint& a, const ModelPoint& b, double tol) {
  for (int i = 0; i < 3; ++i) {
    const double scale = std::max({1.0, std::abs(a.spatial()[i]), std::abs(b.spatial()[i])});
    if (std::abs(a.spatial()[i] - b.spatial()[i]) > tol * scale) return false;
  }
  return true;
}

bool contains(GeometryKind kind, const ModelPoint& p) {
  const double x = p.x(), y = p.y(), z = p.z();
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) return false;
  if (kind == GeometryKind::SphereTimesR) {
    return x * x + y * y + z * z > 0.0;
  }
  return x > 0.0 && -x * x + y * y + z * z < 0.0;
}

bool contains(GeometryKind kind, const std::array<double, 4>& homogeneous) {
  if (!(homogeneous[0] > 0.0) || !std::isfinite(homogeneous[0])) return false;
  return contains(kind, ModelPoint::from_homogeneous(homogeneous));
}

void require_member(GeometryKind kind, const ModelPoint& p, std::string_view what) {
  if (contains(kind, p)) return;
  std::ostringstream os;
  os.precision(17);
  os << what << " (1, " << p.x() << ", " << p.y() << ", " << p.z() << ") is not in the "
     << geometry_label(kind) << " model";
  throw DomainError(os.str());
}

MetricTensor metric_at(GeometryKind kind, const ModelPoint& p) {
  require_member(kind, p);
  const double x = p.x(), y = p.y(), z = p.z();
  MetricTensor m;
  if (kind == GeometryKind::SphereTimesR) {
    m.g = Eigen::Matrix3d::Identity() / (x * x + y * y + z * z);
    return m;
  }
  const double d = -x * x + y * y + z * z;
  const double d2 = d * d;
  m.g << x * x + y * y + z * z, -2.0 * x * y, -2.0 * x * z,
         -2.0 * x * y, x * x + y * y - z * z, 2.0 * y * z,
         -2.0 * x * z, 2.0 * y * z, x * x - y * y + z * z;
  m.g /= d2;
  return m;
}

ModelPoint to_model(const SphereCoords& c) {
  const double s = std::exp(c.t);
  return ModelPoint(s * std::cos(c.phi) * std::cos(c.theta),
                    s * std::sin(c.phi) * std::cos(c.theta),
                    s * std::sin(c.theta));
}

ModelPoint to_model(const HyperbolicCoords& c) {
  const double s = std::exp(c.t);
  return ModelPoint(s * std::cosh(c.r),
                    s * std::sinh(c.r) * std::cos(c.alpha),
                    s * std::sinh(c.r) * std::sin(c.alpha));
}

ModelPoint to_model(GeometryKind kind, const IntrinsicCoords& c) {
  constexpr double pi = std::numbers::pi;
  if (kind == GeometryKind::SphereTimesR) {
    const auto* sc = std::get_if<SphereCoords>(&c);
    if (sc == nullptr) throw PrecondError("S2xR expects (t, phi, theta) coordinates");
    if (!(sc->phi > -pi && sc->phi <= pi) || !(std::abs(sc->theta) <= pi / 2)) {
      throw PrecondError("geographic coordinates out of range");
    }
    return to_model(*sc);
  }
  const auto* hc = std::get_if<HyperbolicCoords>(&c);
  if (hc == nullptr) throw PrecondError("H2xR expects (t, r, alpha) coordinates");
  if (!(hc->r >= 0.0) || !(hc->alpha > -pi && hc->alpha <= pi)) {
    throw PrecondError("cylindrical coordinates out of range");
  }
  return to_model(*hc);
}

SphereCoords to_sphere_coords(const ModelPoint& p) {
  require_member(GeometryKind::SphereTimesR, p);
  const double n = p.spatial().norm();
  SphereCoords c;
  c.t = std::log(n);
  c.phi = std::atan2(p.y(), p.x());
  if (c.phi == -std::numbers::pi) c.phi = std::numbers::pi;
  c.theta = std::atan2(p.z(), std::hypot(p.x(), p.y()));
  return c;
}

HyperbolicCoords to_hyperbolic_coords(const ModelPoint& p) {
  require_member(GeometryKind::HyperbolicTimesR, p);
  const double rho = std::hypot(p.y(), p.z());
  const double q = (p.x() - rho) * (p.x() + rho);
  HyperbolicCoords c;
  c.t = 0.5 * std::log(q);
  c.r = std::asinh(rho / std::sqrt(q));
  c.alpha = rho > 0.0 ? std::atan2(p.z(), p.y()) : 0.0;
  if (c.alpha == -std::numbers::pi) c.alpha = std::numbers::pi;
  return c;
}

}  // namespace thurston
