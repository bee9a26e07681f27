#pragma once

#include <random>

#include "thurston/geodesic.hpp"
#include "thurston/geometry.hpp"
#include "thurston/triangle.hpp"

namespace thurston::sampling {

using Rng = std::mt19937_64;

// Geodesic parameters with tau in [0.05, tau_max] and |v| <= 1.5. For S2xR
// the planar arc tau * cos v stays below pi - 0.01 so the principal inverse
// branch recovers the same parameters.
GeodesicParams random_params(GeometryKind kind, Rng& rng, double tau_max);

// Member point with fibre coordinate in [-1.5, 1.5] (H2xR radius <= 2.5).
ModelPoint random_point(GeometryKind kind, Rng& rng);

// Non-degenerate triangle with three random vertices.
GeodesicTriangle random_triangle(GeometryKind kind, Rng& rng);

// Triangle whose vertices lie on a plane through E0. For S2xR the vertex
// directions span less than a half-turn, so the sides do not wind around the
// fibre cylinder.
GeodesicTriangle random_coplanar_triangle(GeometryKind kind, Rng& rng);

}  // namespace thurston::sampling
