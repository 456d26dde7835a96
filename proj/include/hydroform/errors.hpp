#pragma once

#include <stdexcept>
#include <string>

namespace hydroform {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Index tuple outside the admissible lattice (l > n, l3 > n3, or l-l2+l3+1 < 0).
struct IndexViolation : Error {
  using Error::Error;
};
/// A denominator Pochhammer hits zero before a terminating series ends.
struct DegenerateDenominator : Error {
  using Error::Error;
};
struct BadQuantumNumbers : Error {
  using Error::Error;
};
/// u = alpha/beta at a value where a closed form degenerates (0 or 1).
struct DegenerateU : Error {
  using Error::Error;
};
struct DegenerateQ : Error {
  using Error::Error;
};
struct SingularPoint : Error {
  using Error::Error;
};
struct ConvergenceRegionViolated : Error {
  using Error::Error;
};
struct InsufficientSeeds : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};

}  // namespace hydroform
