#pragma once

// Randomized identity-verification suite: exercises companion relations,
// derivatives, addition/half/shift theorems, and the ratio and
// antiderivative tables at random moduli and arguments, reporting the
// worst residual per family.

#include <cstdint>
#include <string>
#include <vector>

namespace genjac::verify {

struct FamilyResult {
  std::string name;
  double max_residual;
  double tol;
  std::size_t points;
  bool pass;
};

struct Report {
  std::vector<FamilyResult> families;
  bool all_pass;
  std::uint64_t seed;
  int trials;
};

// trials = random points per family.  tol_override > 0 replaces every
// family's default tolerance.
Report run(std::uint64_t seed, int trials, double tol_override = 0);

std::string format_report(const Report& rep);

}  // namespace genjac::verify
