#pragma once

#include <array>
#include <string_view>

#include "thurston/geodesic.hpp"
#include "thurston/geometry.hpp"
#include "thurston/numerics.hpp"

namespace thurston {

struct TriangleAngles {
  double w1 = 0.0;
  double w2 = 0.0;
  double w3 = 0.0;
  double sum = 0.0;
};

enum class AngleSumClass { SumEqualsPi, SumAbovePi, SumBelowPi };

std::string_view angle_sum_class_name(AngleSumClass c) noexcept;  // "equal" / "above" / "below"

// Unit tangent at the base point towards A_i^j, the image of vertex i under
// the map taking vertex j to the base point (j = 0: no map).
struct TangentEndpoint {
  int i = 0;
  int j = 0;
  TangentVector vec;
};

// Residuals |t_2^0 + t_1^2|, |t_3^0 + t_1^3|, |t_3^2 + t_2^3|.
struct AntipodalResiduals {
  double side12 = 0.0;
  double side13 = 0.0;
  double side23 = 0.0;
};

// Geodesic triangle stored with its first vertex moved to the base point.
class GeodesicTriangle {
 public:
  // DomainError for non-members, DegenerateError for coincident vertices.
  GeodesicTriangle(GeometryKind kind, const ModelPoint& a1, const ModelPoint& a2,
                   const ModelPoint& a3);

  GeometryKind kind() const { return kind_; }
  // i in {1, 2, 3}; vertex(1) is the base point.
  const ModelPoint& vertex(int i) const;

 private:
  GeometryKind kind_;
  std::array<ModelPoint, 3> v_;
};

// Tangents for (i, j) in (1,3), (1,2), (2,3), (3,2), (3,0), (2,0).
std::array<TangentEndpoint, 6> tangent_endpoints(const GeodesicTriangle& tri);

AntipodalResiduals antipodal_residuals(const GeodesicTriangle& tri);

// Interior angle at vertex i in {1, 2, 3}, in [0, pi].
double vertex_angle(const GeodesicTriangle& tri, int i);

TriangleAngles angle_sum(const GeodesicTriangle& tri);

bool coplanar_with_center(const GeodesicTriangle& tri,
                          const NumericsProfile& num = default_numerics());

// True when the three vertex directions of an E0-coplanar S2xR triangle do not
// fit in a closed half-plane: its sides then wind around the fibre cylinder.
bool winds_around_fibre(const GeodesicTriangle& tri);

// Throws ConsistencyError when the computed sum contradicts the class.
AngleSumClass classify(const GeodesicTriangle& tri,
                       const NumericsProfile& num = default_numerics());

}  // namespace thurston
