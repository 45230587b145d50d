#pragma once

#include <string>
#include <vector>

namespace eelim::verify {

/// One regression check: an actual value compared against an expected value
/// under a comparison mode.
///   rel    - |actual - expected| <= tolerance * |expected|
///   abs    - |actual - expected| <= tolerance
///   factor - actual/expected and expected/actual both <= tolerance
///   le     - actual <= tolerance (expected echoes the bound)
///   ge     - actual >= tolerance (expected echoes the bound)
///   exact  - actual == expected
struct Check {
  std::string id;
  int criterion = 0;
  std::string description;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  std::string mode;
  bool pass = false;
};

struct Report {
  std::vector<Check> checks;
  bool all_pass() const;
  int criteria_count() const;
  bool criterion_pass(int criterion) const;
};

/// Runs the full numeric regression suite (closed-form anchors, geometry
/// anchors, the lattice-oracle cross-check and the randomized property
/// suites). Deterministic: fixed seeds, fixed lattice.
Report run_all_checks();

}  // namespace eelim::verify
