#pragma once

#include <functional>
#include <vector>

#include "hydroform/pcoeff.hpp"

namespace hydroform::recurrence {

using pcoeff::PIndex;
using pcoeff::PValue;

/// Supplies P values for the residual evaluators (lets sweeps memoize);
/// null means the series backend at the given (u, w).
using PProvider = std::function<Real(const PIndex&)>;

/// Scaled residual of the (n3, l3)-side four-term relation
///   (n3+l3+1) P_{n3,l3} - (n3-l3) P_{n3-1,l3} = P_{n3,l3-1} - P_{n3-1,l3-1}
/// (indices n, l, l2 held fixed, every P from the series backend).
/// Returns |LHS - RHS| / max participating |P|.
Real residual_rec1_first(long n, long l, long n3, long l3, long l2, const Real& u, const Real& w,
                         const PrecisionContext& ctx, const PProvider& provider = {});

/// Mirror relation on the (n, l) side:
///   (n+l+1) P_{n,l} - (n-l) P_{n-1,l} = P_{n,l-1} - P_{n-1,l-1}.
Real residual_rec1_second(long n, long l, long n3, long l3, long l2, const Real& u, const Real& w,
                          const PrecisionContext& ctx, const PProvider& provider = {});

/// Seven-term relation connecting multipole orders l2 and l2+1 at fixed l, l3.
Real residual_l2_step(long n, long l, long n3, long l3, long l2, const Real& u, const Real& w,
                      const PrecisionContext& ctx, const PProvider& provider = {});

/// Five-term relation on the (n, n3) lattice at fixed angular indices:
///   (n3+l3+2) u P_{n,n3+1} + (n3-l3) u P_{n,n3-1} - (n+l+2) P_{n+1,n3}
///   - (n-l) P_{n-1,n3} + 2 (n+1 - u (n3+1)) P_{n,n3} = 0.
Real residual_fixed_angular(long n, long l, long n3, long l3, long l2, const Real& u, const Real& w,
                            const PrecisionContext& ctx, const PProvider& provider = {});

struct PropagationResult {
  PValue value;
  long steps = 0;                     // number of recurrence solves performed
  bool amplification_warning = false; // an intermediate grew > 1e6 relative to the seeds
};

/// Computes P at `target` purely through the fixed-angular five-term relation,
/// solving any stencil instance with a single unknown until the target
/// resolves.  Seeds must share (l, l3, l2) with the target.  u must be
/// nonzero.  Throws InsufficientSeeds when the target is not determined by
/// repeated application.
PropagationResult propagate_lattice(const std::vector<PValue>& seeds, const PIndex& target, const Real& u,
                                    const Real& w, const PrecisionContext& ctx);

}  // namespace hydroform::recurrence
