#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "thurston/geometry.hpp"

namespace thurston {

// Triangle family (1,1,0,0), a2, A3(t) = (1, t*ray) for t in [t_min, t_max].
struct SweepSpec {
  GeometryKind kind = GeometryKind::SphereTimesR;
  ModelPoint a2;
  Eigen::Vector3d ray = Eigen::Vector3d::UnitX();
  double t_min = 1e-3;
  double t_max = 5.0;
  std::size_t samples = 512;
};

enum class ExtremumKind { Maximum, Minimum, Flat };

std::string_view extremum_kind_name(ExtremumKind k) noexcept;  // "maximum" / "minimum" / "degenerate-flat"

struct SweepResult {
  std::vector<std::pair<double, double>> series;  // (t, S(t)), t strictly increasing
  double t_extremum = 0.0;                        // NaN for a flat family
  double s_extremum = 0.0;
  ExtremumKind extremum_kind = ExtremumKind::Maximum;
};

struct SweepLimits {
  double s_near_zero = 0.0;
  double s_near_infinity = 0.0;
};

ModelPoint sweep_vertex(const SweepSpec& spec, double t);

// Angle sum of the triangle at parameter t.
double sweep_sum(const SweepSpec& spec, double t);

// PrecondError on a malformed spec; DomainError if some A3(t) leaves the model.
void validate(const SweepSpec& spec);

// Log-spaced grid, then golden-section refinement of the best cell to 1e-7.
SweepResult evaluate(const SweepSpec& spec);

SweepLimits limits_check(const SweepSpec& spec, double large_t = 1e3);

std::string to_csv(const SweepResult& result, int precision = 6);

// Schema v1: {schema, kind, a2, ray, series, t0, s0, extremum_kind}.
std::string to_json(const SweepSpec& spec, const SweepResult& result);

// Inverse of to_json. PrecondError on schema violations.
std::pair<SweepSpec, SweepResult> sweep_from_json(std::string_view text);

}  // namespace thurston
