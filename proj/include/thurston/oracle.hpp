#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "thurston/geodesic.hpp"
#include "thurston/geometry.hpp"

namespace thurston {

// Intrinsic coordinates and velocities along a geodesic:
// S2xR (t, phi, theta, t', phi', theta'), H2xR (t, r, alpha, t', r', alpha').
struct ODEState {
  std::array<double, 6> y{};

  // g(velocity, velocity) - 1 for the intrinsic metric.
  double speed_defect(GeometryKind kind) const;
};

struct GeodesicIntegration {
  std::vector<ModelPoint> points;  // steps + 1 points at equal tau spacing
  std::vector<ODEState> states;    // chart states at the same nodes
  double max_speed_drift = 0.0;    // max |g(v, v) - 1| over accepted steps
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
};

// Adaptive Dormand-Prince 5(4) integration of the intrinsic geodesic
// equations, independent of the closed forms. PrecondError unless
// tau <= 10 and steps >= 100.
GeodesicIntegration integrate_geodesic(GeometryKind kind, const GeodesicParams& g,
                                       std::size_t steps);

// Length of a curve sampled at equally spaced parameter values, integrating
// the ambient metric speed over a piecewise-cubic interpolant.
double arc_length_quadrature(GeometryKind kind, std::span<const ModelPoint> curve);

}  // namespace thurston
