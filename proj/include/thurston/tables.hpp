#pragma once

#include <vector>

#include "thurston/geometry.hpp"
#include "thurston/triangle.hpp"

namespace thurston {

// One published row: vertices (1,1,0,0), a2, a3 and its four angle values.
struct PublishedRow {
  int table = 0;  // 1: S2xR, 2: H2xR
  int row = 0;    // 1-based
  GeometryKind kind = GeometryKind::SphereTimesR;
  ModelPoint a2;
  ModelPoint a3;
  TriangleAngles reference;
};

struct ReproducedRow {
  PublishedRow published;
  TriangleAngles computed;
  double delta = 0.0;  // max |computed - reference| over w1, w2, w3, sum
};

struct TableReport {
  std::vector<ReproducedRow> rows;
  double max_deviation = 0.0;
  bool within(double tol) const { return max_deviation <= tol; }
};

inline constexpr double kTableTolerance = 1e-4;

const std::vector<PublishedRow>& published_rows();

// reference_offset is added to every published sum; a non-zero value lets
// callers exercise the regression guard.
TableReport reproduce_tables(double reference_offset = 0.0);

}  // namespace thurston
