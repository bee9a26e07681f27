#include "thurston/geodesic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "thurston/errors.hpp"
#include "thurston/isometry.hpp"

namespace thurston {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_u(double u) { return u <= -kPi ? u + 2.0 * kPi : u; }

}  // namespace

std::string_view inverse_case_name(InverseCase c) noexcept {
  switch (c) {
    case InverseCase::Generic: return "generic";
    case InverseCase::UnitNorm: return "unit-norm";
    case InverseCase::FibreAxis: return "fibre-axis";
    case InverseCase::OppositeAxis: return "opposite-axis";
  }
  return "unknown";
}

double angular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2.0 * kPi);
  return d > kPi ? 2.0 * kPi - d : d;
}

void validate(const GeodesicParams& g) {
  if (!(g.u > -kPi && g.u <= kPi) || !(std::abs(g.v) <= kPi / 2) || !(g.tau >= 0.0) ||
      !std::isfinite(g.tau)) {
    std::ostringstream os;
    os << "geodesic parameters out of range (u=" << g.u << ", v=" << g.v << ", tau=" << g.tau << ")";
    throw PrecondError(os.str());
  }
}

ModelPoint geodesic_point(GeometryKind kind, const GeodesicParams& g) {
  validate(g);
  const double fibre = std::exp(g.tau * std::sin(g.v));
  const double s = g.tau * std::cos(g.v);
  double radial, lateral;
  if (kind == GeometryKind::SphereTimesR) {
    radial = std::cos(s);
    lateral = std::sin(s);
  } else {
    radial = std::cosh(s);
    lateral = std::sinh(s);
  }
  ModelPoint p(fibre * radial, fibre * lateral * std::cos(g.u), fibre * lateral * std::sin(g.u));
  if (kind == GeometryKind::SphereTimesR && p.spatial().squaredNorm() == 0.0) {
    throw DegenerateError("geodesic passes through the excluded model centre");
  }
  return p;
}

InverseCase inverse_case(GeometryKind kind, const ModelPoint& p) {
  require_member(kind, p);
  if (p.y() == 0.0 && p.z() == 0.0) {
    return p.x() > 0.0 ? InverseCase::FibreAxis : InverseCase::OppositeAxis;
  }
  const double rho2 = p.y() * p.y() + p.z() * p.z();
  const double q = kind == GeometryKind::SphereTimesR ? p.x() * p.x() + rho2 : p.x() * p.x() - rho2;
  return q == 1.0 ? InverseCase::UnitNorm : InverseCase::Generic;
}

GeodesicParams geodesic_params(GeometryKind kind, const ModelPoint& p) {
  const InverseCase c = inverse_case(kind, p);
  if (p == base_point()) throw DomainError("the base point has no geodesic direction");

  const double rho = std::hypot(p.y(), p.z());
  double fibre_log;  // log sqrt(Q): the fibre displacement tau * sin v
  double planar;     // arc along the S2 / H2 factor: tau * cos v
  if (kind == GeometryKind::SphereTimesR) {
    fibre_log = 0.5 * std::log(p.x() * p.x() + rho * rho);
    planar = std::atan2(rho, p.x());  // arccos(x / sqrt(Q)), well conditioned
  } else {
    const double q = (p.x() - rho) * (p.x() + rho);
    if (!(q > 0.0)) throw UnreachableError("point outside the H2xR cone");
    fibre_log = 0.5 * std::log(q);
    planar = std::asinh(rho / std::sqrt(q));  // arccosh(x / sqrt(Q))
  }

  GeodesicParams g;
  switch (c) {
    case InverseCase::FibreAxis:
      g.u = 0.0;
      g.v = fibre_log > 0.0 ? kPi / 2 : -kPi / 2;
      g.tau = std::abs(fibre_log);
      return g;
    case InverseCase::OppositeAxis:
      g.u = 0.0;
      break;
    case InverseCase::UnitNorm:
      g.u = wrap_u(std::atan2(p.z(), p.y()));
      g.v = 0.0;
      g.tau = planar;
      return g;
    case InverseCase::Generic:
      g.u = wrap_u(std::atan2(p.z(), p.y()));
      break;
  }
  g.v = std::atan2(fibre_log, planar);
  g.tau = std::hypot(fibre_log, planar);
  return g;
}

TangentVector tangent_of(const GeodesicParams& g) {
  const double cv = std::cos(g.v);
  return {std::sin(g.v), cv * std::cos(g.u), cv * std::sin(g.u)};
}

double distance(GeometryKind kind, const ModelPoint& p1, const ModelPoint& p2) {
  require_member(kind, p1, "first point");
  require_member(kind, p2, "second point");
  if (p1 == p2) return 0.0;
  const ModelPoint image = apply(to_origin(kind, p1), p2);
  if (image == base_point()) return 0.0;
  return geodesic_params(kind, image).tau;
}

std::vector<ModelPoint> sample_curve(GeometryKind kind, const GeodesicParams& g, std::size_t n) {
  if (n < 2) throw PrecondError("a sampled curve needs at least two points");
  validate(g);
  std::vector<ModelPoint> out;
  out.reserve(n);
  out.push_back(base_point());
  for (std::size_t i = 1; i + 1 < n; ++i) {
    GeodesicParams step = g;
    step.tau = g.tau * static_cast<double>(i) / static_cast<double>(n - 1);
    out.push_back(geodesic_point(kind, step));
  }
  out.push_back(geodesic_point(kind, g));
  return out;
}

}  // namespace thurston
