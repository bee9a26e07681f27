#include "thurston/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "thurston/errors.hpp"

namespace thurston {

namespace {

using State = std::array<double, 6>;

constexpr double kRelTol = 1e-10;
constexpr double kAbsTol = 1e-12;
constexpr double kDriftLimit = 1e-9;
constexpr double kSeriesRadius = 1e-6;

// The charts are placed so the integrated geodesic stays away from their
// singular sets: S2xR starts on the equator heading 45 degrees north-east
// (latitude never exceeds 45 degrees); H2xR uses polar coordinates around a
// pole at distance 1 from the base point, with a heading that never passes
// through the pole.
constexpr double kSphereHeading = std::numbers::pi / 4;
constexpr double kPoleOffset = 1.0;
constexpr double kPolarHeading = 2.0 * std::numbers::pi / 3;

// t'' = 0, phi'' = 2 tan(theta) theta' phi', theta'' = -sin(theta) cos(theta) phi'^2
State sphere_rhs(const State& s) {
  const double theta = s[2];
  const double c = std::cos(theta);
  if (std::abs(c) < 1e-12) throw SingularityError("geodesic reached a chart pole");
  const double dphi = s[4], dtheta = s[5];
  return {s[3], dphi, dtheta, 0.0, 2.0 * std::tan(theta) * dtheta * dphi,
          -std::sin(theta) * c * dphi * dphi};
}

// t'' = 0, r'' = sinh(r) cosh(r) alpha'^2, alpha'' = -2 coth(r) r' alpha'
State hyperbolic_rhs(const State& s) {
  const double r = s[1], dr = s[4], dalpha = s[5];
  double coth;
  if (std::abs(r) < kSeriesRadius) {
    if (r == 0.0) {
      if (dalpha != 0.0) throw SingularityError("angular motion at the polar origin");
      coth = 0.0;
    } else {
      coth = 1.0 / r + r / 3.0;
    }
  } else {
    coth = 1.0 / std::tanh(r);
  }
  return {s[3], dr, dalpha, 0.0, std::sinh(r) * std::cosh(r) * dalpha * dalpha,
          -2.0 * coth * dr * dalpha};
}

State rhs(GeometryKind kind, const State& s) {
  return kind == GeometryKind::SphereTimesR ? sphere_rhs(s) : hyperbolic_rhs(s);
}

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [c, k] : terms) {
    for (std::size_t i = 0; i < 6; ++i) out[i] += h * c * (*k)[i];
  }
  return out;
}

// One Dormand-Prince step; returns the 5th-order solution and the scaled error.
std::pair<State, double> dopri_step(GeometryKind kind, const State& y, double h) {
  const State k1 = rhs(kind, y);
  const State k2 = rhs(kind, axpy(y, h, {{1.0 / 5, &k1}}));
  const State k3 = rhs(kind, axpy(y, h, {{3.0 / 40, &k1}, {9.0 / 40, &k2}}));
  const State k4 = rhs(kind, axpy(y, h, {{44.0 / 45, &k1}, {-56.0 / 15, &k2}, {32.0 / 9, &k3}}));
  const State k5 = rhs(kind, axpy(y, h, {{19372.0 / 6561, &k1}, {-25360.0 / 2187, &k2},
                                         {64448.0 / 6561, &k3}, {-212.0 / 729, &k4}}));
  const State k6 = rhs(kind, axpy(y, h, {{9017.0 / 3168, &k1}, {-355.0 / 33, &k2},
                                         {46732.0 / 5247, &k3}, {49.0 / 176, &k4},
                                         {-5103.0 / 18656, &k5}}));
  const State y5 = axpy(y, h, {{35.0 / 384, &k1}, {500.0 / 1113, &k3}, {125.0 / 192, &k4},
                               {-2187.0 / 6784, &k5}, {11.0 / 84, &k6}});
  const State k7 = rhs(kind, y5);
  const State y4 = axpy(y, h, {{5179.0 / 57600, &k1}, {7571.0 / 16695, &k3},
                               {393.0 / 640, &k4}, {-92097.0 / 339200, &k5},
                               {187.0 / 2100, &k6}, {1.0 / 40, &k7}});
  double err = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    const double scale = kAbsTol + kRelTol * std::max(std::abs(y[i]), std::abs(y5[i]));
    err = std::max(err, std::abs(y5[i] - y4[i]) / scale);
  }
  return {y5, err};
}

ModelPoint chart_to_model(GeometryKind kind, const State& s, double u) {
  double x, y, z, heading;
  if (kind == GeometryKind::SphereTimesR) {
    const ModelPoint p = to_model(SphereCoords{s[0], s[1], s[2]});
    x = p.x();
    y = p.y();
    z = p.z();
    heading = kSphereHeading;
  } else {
    const ModelPoint p = to_model(HyperbolicCoords{s[0], s[1], s[2]});
    // Boost along y taking the chart point (cosh d, sinh d, 0) to (1, 0, 0).
    const double ch = std::cosh(kPoleOffset), sh = std::sinh(kPoleOffset);
    x = p.x() * ch - p.y() * sh;
    y = -p.x() * sh + p.y() * ch;
    z = p.z();
    heading = kPolarHeading;
  }
  // Rotate about the x axis so the chart heading becomes the direction u.
  const double beta = u - heading;
  const double cb = std::cos(beta), sb = std::sin(beta);
  return ModelPoint(x, y * cb - z * sb, y * sb + z * cb);
}

State initial_state(GeometryKind kind, const GeodesicParams& g) {
  const double sv = std::sin(g.v), cv = std::cos(g.v);
  if (kind == GeometryKind::SphereTimesR) {
    return {0.0, 0.0, 0.0, sv, cv * std::cos(kSphereHeading), cv * std::sin(kSphereHeading)};
  }
  return {0.0, kPoleOffset, 0.0, sv, cv * std::cos(kPolarHeading),
          cv * std::sin(kPolarHeading) / std::sinh(kPoleOffset)};
}

}  // namespace

double ODEState::speed_defect(GeometryKind kind) const {
  if (kind == GeometryKind::SphereTimesR) {
    const double c = std::cos(y[2]);
    return y[3] * y[3] + c * c * y[4] * y[4] + y[5] * y[5] - 1.0;
  }
  const double sh = std::sinh(y[1]);
  return y[3] * y[3] + y[4] * y[4] + sh * sh * y[5] * y[5] - 1.0;
}

GeodesicIntegration integrate_geodesic(GeometryKind kind, const GeodesicParams& g,
                                       std::size_t steps) {
  validate(g);
  if (g.tau > 10.0) throw PrecondError("oracle integration is limited to tau <= 10");
  if (steps < 100) throw PrecondError("oracle integration needs at least 100 output steps");

  GeodesicIntegration out;
  out.points.reserve(steps + 1);
  out.states.reserve(steps + 1);

  State y = initial_state(kind, g);
  out.states.push_back(ODEState{y});
  out.points.push_back(chart_to_model(kind, y, g.u));
  out.max_speed_drift = std::abs(out.states.back().speed_defect(kind));

  double h = std::min(1e-2, g.tau > 0.0 ? g.tau / static_cast<double>(steps) : 1e-2);
  double pos = 0.0;
  for (std::size_t node = 1; node <= steps; ++node) {
    const double target = g.tau * static_cast<double>(node) / static_cast<double>(steps);
    while (pos < target) {
      const bool last = pos + h >= target;
      const double step = last ? target - pos : h;
      if (step <= 0.0) break;
      const auto [next, err] = dopri_step(kind, y, step);
      const double drift = std::abs(ODEState{next}.speed_defect(kind));
      if (err <= 1.0 && drift <= kDriftLimit) {
        y = next;
        pos = last ? target : pos + step;
        out.max_speed_drift = std::max(out.max_speed_drift, drift);
        ++out.accepted_steps;
        const double grow = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        if (!last) h = step * std::clamp(grow, 0.2, 5.0);
      } else {
        ++out.rejected_steps;
        const double shrink = err > 1.0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.5) : 0.5;
        h = step * shrink;
        if (h < 1e-14) throw SingularityError("step size underflow in geodesic integration");
      }
    }
    out.states.push_back(ODEState{y});
    out.points.push_back(chart_to_model(kind, y, g.u));
  }
  return out;
}

double arc_length_quadrature(GeometryKind kind, std::span<const ModelPoint> curve) {
  const std::size_t n = curve.size();
  if (n < 2) throw PrecondError("a curve needs at least two points");
  for (const ModelPoint& p : curve) require_member(kind, p, "curve point");

  // Three-point Gauss-Legendre on each unit parameter interval.
  const double off = 0.5 * std::sqrt(3.0 / 5.0);
  const std::array<double, 3> nodes{0.5 - off, 0.5, 0.5 + off};
  const std::array<double, 3> weights{5.0 / 18, 8.0 / 18, 5.0 / 18};
  const std::size_t width = std::min<std::size_t>(n, 4);

  double length = 0.0;
  for (std::size_t seg = 0; seg + 1 < n; ++seg) {
    // Lagrange window of `width` nodes containing [seg, seg + 1].
    std::size_t first = seg > 0 ? seg - 1 : 0;
    first = std::min(first, n - width);
    for (std::size_t q = 0; q < 3; ++q) {
      const double s = static_cast<double>(seg) + nodes[q];
      Eigen::Vector3d pos = Eigen::Vector3d::Zero();
      Eigen::Vector3d vel = Eigen::Vector3d::Zero();
      for (std::size_t k = first; k < first + width; ++k) {
        const double sk = static_cast<double>(k);
        double basis = 1.0;
        double deriv = 0.0;
        for (std::size_t m = first; m < first + width; ++m) {
          if (m == k) continue;
          const double sm = static_cast<double>(m);
          double term = 1.0 / (sk - sm);
          for (std::size_t l = first; l < first + width; ++l) {
            if (l == k || l == m) continue;
            const double sl = static_cast<double>(l);
            term *= (s - sl) / (sk - sl);
          }
          deriv += term;
          basis *= (s - sm) / (sk - sm);
        }
        pos += basis * curve[k].spatial();
        vel += deriv * curve[k].spatial();
      }
      const MetricTensor g = metric_at(kind, ModelPoint(pos));
      length += weights[q] * std::sqrt(std::max(0.0, g.quadratic(vel)));
    }
  }
  return length;
}

}  // namespace thurston
