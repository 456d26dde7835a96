#pragma once

#include <string>
#include <vector>

#include "hydroform/formfactor.hpp"
#include "hydroform/oracle.hpp"
#include "hydroform/recurrence.hpp"

namespace hydroform::validate {

struct CheckResult {
  std::string name;
  double measured = 0;  // worst residual observed
  double bound = 0;     // it must stay at or below this
  bool pass = false;
  long cases = 0;
};

inline CheckResult make_result(std::string name, const Real& measured, const Real& bound, long cases) {
  CheckResult r;
  r.name = std::move(name);
  r.measured = measured.to_double();
  r.bound = bound.to_double();
  r.pass = measured <= bound;
  r.cases = cases;
  return r;
}

/// Deterministic (u, w) sample in (0.1, 3)^2 built from raw mt19937_64 draws
/// (no distribution objects, so the stream is identical everywhere).
std::vector<std::pair<Real, Real>> uw_samples(size_t count, unsigned long seed, const PrecisionContext& ctx);

/// All admissible P indices with n, n3 <= nmax.
std::vector<pcoeff::PIndex> admissible_indices(long nmax);

/// p_series vs p_gegenbauer over all admissible indices with n, n3 <= nmax
/// and `pairs` deterministic (u, w) samples; disagreements beyond the bound
/// retry once through the doubling path before counting as failures.
CheckResult suite_backends(long nmax, size_t pairs, const PrecisionContext& ctx);

/// Symmetry residual P(idx; u, w) = u^{-(l2+1)} P(swapped; 1/u, w/u) over the
/// same sweep.
CheckResult suite_symmetry(long nmax, size_t pairs, const PrecisionContext& ctx);

/// All four recurrence relations over n, n3 <= nmax, all admissible angular
/// indices, u in {1/2, 1, (n3+1)/(n+1), 2}, w in {9/10, (u+1)/2, 3/2}.
std::vector<CheckResult> suite_recurrences(long nmax, const PrecisionContext& ctx);

/// Hydrogen form factor at k = 0 equals the state-pair Kronecker delta for
/// all principal quantum numbers <= nprincipal.
CheckResult suite_orthogonality(long nprincipal, const PrecisionContext& ctx);

/// radial_matrix_element against the quadrature oracle: n, n' <= nmax, all
/// admissible (l, l', l2), k in {1/10, 1, 10}, hydrogen and alpha = beta = 1
/// Sturmian channels.
CheckResult suite_oracle(long nmax, const PrecisionContext& ctx);

/// Pointwise multipole-expansion truncation error at n3_max = n + 12 for
/// n <= nmax_expansion (inside the v < 1/2 region).
CheckResult suite_expansion(long nmax_expansion, const PrecisionContext& ctx);

/// Dipole structure: Kronecker form of the monopole coefficient at the
/// hydrogen argument and the vanishing of the f_1 dipole term.
std::vector<CheckResult> suite_dipole(long nmax, const PrecisionContext& ctx);

/// Elastic hydrogen ground-state form factor against 16/(k^2+4)^2.
CheckResult check_elastic_1s(const PrecisionContext& ctx);

/// Finite-sum vs 3F2 forms of the solid-harmonic expansion coefficients,
/// plus the convergence-region guard.
CheckResult check_dcoeff(const PrecisionContext& ctx);

/// Measured finite-difference convergence order of the 4D Laplacian checks.
CheckResult check_laplace_order(const PrecisionContext& ctx);

/// Named suite dispatch for the CLI: backends, recurrences, orthogonality,
/// oracle, expansion, or all.  Unknown names return an empty vector.
std::vector<CheckResult> run_suite(const std::string& name, long nmax, const PrecisionContext& ctx);
bool suite_known(const std::string& name);

}  // namespace hydroform::validate
