#pragma once

#include <vector>

#include "hydroform/errors.hpp"
#include "hydroform/real.hpp"

namespace hydroform::exactmath {

inline ExactInt factorial_exact(long n) { return ExactInt::factorial(static_cast<unsigned long>(n)); }
inline ExactInt binomial_exact(long n, long k) { return ExactInt::binomial(static_cast<unsigned long>(n), k); }
inline ExactInt double_factorial_exact(long n) {
  return n <= 0 ? ExactInt(1) : ExactInt::double_factorial(static_cast<unsigned long>(n));
}

/// Gegenbauer polynomial C^lambda_q(x) by the three-term recurrence in q.
/// q < 0 returns 0 (the convention every closed form here relies on).
Real gegenbauer(long lambda, long q, const Real& x);

/// Scaled Gegenbauer s^q C^lambda_q(b/s) where s^2 = s2, computed without
/// forming b/s.  Well defined for s2 <= 0 as well (the result is a polynomial
/// in b and s2); this is what keeps the 1s closed form finite at v -> 0.
Real gegenbauer_scaled(long lambda, long q, const Real& b, const Real& s2);

/// All of C^lambda_0..C^lambda_qmax(x) in one recurrence pass.
std::vector<Real> gegenbauer_row(long lambda, long qmax, const Real& x);

/// Terminating Gauss hypergeometric 2F1(-N, b; c; z), summed exactly in N+1
/// terms.  Throws DegenerateDenominator if c hits a nonpositive integer
/// before the series terminates.
Real hyp2f1_terminating(long minus_n, const Real& b, const Real& c, const Real& z);

/// Terminating 3F2(-N, a2, a3; b1, b2; z).
Real hyp3f2_terminating(long minus_n, const Real& a2, const Real& a3, const Real& b1, const Real& b2,
                        const Real& z);

/// Confluent hypergeometric Phi(-m, c; x) for the bound-state polynomial case.
Real kummer_bound(long m, const Real& c, const Real& x);

/// Spherical Bessel j_l(x), ascending series near the origin, forward
/// recurrence from j_0, j_1 in the oscillatory regime.
Real spherical_bessel(long l, const Real& x);

}  // namespace hydroform::exactmath
