#pragma once

namespace thurston {

// Every tolerance used by the library lives here so that a single profile
// controls reproducibility.
struct NumericsProfile {
  double coordinate = 1e-10;      // model-coordinate equality
  double arc_length = 1e-7;       // quadrature vs. closed-form lengths
  double coplanarity = 1e-10;     // relative determinant for E0-coplanarity
  double classification = 1e-7;   // angle sum vs. pi when classifying
  double precondition = 1e-12;    // structural preconditions (z = 0, unit norm)
};

inline const NumericsProfile& default_numerics() {
  static const NumericsProfile profile{};
  return profile;
}

}  // namespace thurston
