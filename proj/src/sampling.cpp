#include "thurston/sampling.hpp"

#include <cmath>
#include <numbers>

#include "thurston/errors.hpp"

namespace thurston::sampling {

namespace {

constexpr double kPi = std::numbers::pi;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double lorentz(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return -a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

}  // namespace

GeodesicParams random_params(GeometryKind kind, Rng& rng, double tau_max) {
  for (;;) {
    GeodesicParams g;
    g.u = uniform(rng, -kPi, kPi);
    if (g.u == -kPi) g.u = kPi;
    g.v = uniform(rng, -1.5, 1.5);
    g.tau = uniform(rng, 0.05, tau_max);
    if (kind == GeometryKind::SphereTimesR && g.tau * std::cos(g.v) > kPi - 0.01) continue;
    return g;
  }
}

ModelPoint random_point(GeometryKind kind, Rng& rng) {
  const double t = uniform(rng, -1.5, 1.5);
  if (kind == GeometryKind::SphereTimesR) {
    const double phi = uniform(rng, -kPi, kPi);
    const double theta = std::asin(uniform(rng, -1.0, 1.0));
    return to_model(SphereCoords{t, phi, theta});
  }
  return to_model(HyperbolicCoords{t, uniform(rng, 0.0, 2.5), uniform(rng, -kPi, kPi)});
}

GeodesicTriangle random_triangle(GeometryKind kind, Rng& rng) {
  for (;;) {
    try {
      return GeodesicTriangle(kind, random_point(kind, rng), random_point(kind, rng),
                              random_point(kind, rng));
    } catch (const DegenerateError&) {
    }
  }
}

GeodesicTriangle random_coplanar_triangle(GeometryKind kind, Rng& rng) {
  for (;;) {
    const ModelPoint a1 = random_point(kind, rng);
    const Eigen::Vector3d d(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
    std::array<ModelPoint, 3> v;
    v[0] = a1;
    if (kind == GeometryKind::SphereTimesR) {
      const Eigen::Vector3d n = a1.spatial().normalized();
      const Eigen::Vector3d w = d - d.dot(n) * n;
      if (w.norm() < 1e-3) continue;
      const Eigen::Vector3d e = w.normalized();
      for (std::size_t i = 1; i < 3; ++i) {
        const double angle = uniform(rng, -kPi / 2 + 0.05, kPi / 2 - 0.05);
        const double s = std::exp(uniform(rng, -1.5, 1.5));
        v[i] = ModelPoint(s * (std::cos(angle) * n + std::sin(angle) * e));
      }
    } else {
      const Eigen::Vector3d n = a1.spatial() / std::sqrt(-lorentz(a1.spatial(), a1.spatial()));
      const Eigen::Vector3d w = d + lorentz(d, n) * n;
      const double w2 = lorentz(w, w);
      if (!(w2 > 1e-6)) continue;
      const Eigen::Vector3d e = w / std::sqrt(w2);
      for (std::size_t i = 1; i < 3; ++i) {
        const double r = uniform(rng, -2.0, 2.0);
        const double s = std::exp(uniform(rng, -1.5, 1.5));
        v[i] = ModelPoint(s * (std::cosh(r) * n + std::sinh(r) * e));
      }
    }
    try {
      return GeodesicTriangle(kind, v[0], v[1], v[2]);
    } catch (const DegenerateError&) {
    }
  }
}

}  // namespace thurston::sampling
