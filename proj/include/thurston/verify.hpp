#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "thurston/geodesic.hpp"
#include "thurston/geometry.hpp"

namespace thurston {

struct SuiteReport {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;  // reproducing input of the first failed trial
};

struct VerifyOptions {
  GeometryKind kind = GeometryKind::SphereTimesR;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  // Name of a suite whose checked residual is offset by 1e-3; used to test
  // that failures are reported. Empty for a normal run.
  std::string inject_fault;
};

struct VerifyReport {
  GeometryKind kind = GeometryKind::SphereTimesR;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteReport> suites;

  bool ok() const;
};

// Error in (u, v, tau) that rounding geodesic_point(g) to double precision
// alone can cause. Zero for S2xR; for H2xR it grows like eps * e^(2 s) with
// the planar arc s = tau cos v, since x and rho then agree to about 2 s / ln 2
// leading bits.
double roundtrip_rounding_bound(GeometryKind kind, const GeodesicParams& g);

// Suite names, in run order.
const std::vector<std::string>& verify_suite_names();

// Runs roundtrip, isometry-invariance, ode-equivalence, trichotomy and
// antipodality suites. Deterministic for a given seed.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace thurston
