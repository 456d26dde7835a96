#include "hydroform/angular.hpp"

#include <algorithm>

#include "hydroform/special.hpp"

namespace hydroform::exactmath {

Real clebsch3d(long l1, long m1, long l2, long m2, long l, long m, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Real zero = Real::of(0L, prec);
  if (l1 < 0 || l2 < 0 || l < 0) return zero;
  if (m1 + m2 != m) return zero;
  if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m) > l) return zero;
  if (l < std::abs(l1 - l2) || l > l1 + l2) return zero;

  // alternating sum over k, exact
  const long kmin = std::max({0L, l2 - l - m1, l1 - l + m2});
  const long kmax = std::min({l1 + l2 - l, l1 - m1, l2 + m2});
  if (kmin > kmax) return zero;
  Rational sum(0);
  for (long k = kmin; k <= kmax; ++k) {
    ExactInt den = factorial_exact(k) * factorial_exact(l1 + l2 - l - k) * factorial_exact(l1 - m1 - k) *
                   factorial_exact(l2 + m2 - k) * factorial_exact(l - l2 + m1 + k) *
                   factorial_exact(l - l1 - m2 + k);
    Rational term(ExactInt((k % 2) ? -1 : 1), den);
    sum = sum + term;
  }
  if (sum.is_zero()) return zero;

  // squared prefactor, exact rational
  ExactInt num = ExactInt(2 * l + 1) * factorial_exact(l1 + l2 - l) * factorial_exact(l1 - l2 + l) *
                 factorial_exact(-l1 + l2 + l) * factorial_exact(l + m) * factorial_exact(l - m) *
                 factorial_exact(l1 + m1) * factorial_exact(l1 - m1) * factorial_exact(l2 + m2) *
                 factorial_exact(l2 - m2);
  Rational q(num, factorial_exact(l1 + l2 + l + 1));
  return Real::of(sum, prec) * sqrt(Real::of(q, prec));
}

Complex solid_racah(long l, long m, const Vec3& v) {
  const mpfr_prec_t prec = v.x.prec();
  const long am = std::abs(m);
  if (l < 0 || am > l) throw BadQuantumNumbers("solid_racah: |m| > l");

  // R_mm = prod_j -sqrt((2j-1)/(2j)) (x+iy), then upward in l
  Complex cur(Real::of(1L, prec), Real::of(0L, prec));
  for (long j = 1; j <= am; ++j) {
    Complex xy(v.x, v.y);
    cur = xy * cur * (-sqrt(Real::of(2 * j - 1, prec) / (2 * j)));
  }
  if (l > am) {
    Real r2 = v.norm2();
    Complex prev(Real::of(0L, prec), Real::of(0L, prec));
    for (long ll = am + 1; ll <= l; ++ll) {
      Real c1 = Real::of(2 * ll - 1, prec) / sqrt(Real::of(ll * ll - am * am, prec));
      Real c2 = sqrt(Real::of((ll - 1) * (ll - 1) - am * am, prec) / (ll * ll - am * am));
      Complex nxt = cur * (c1 * v.z) - prev * (c2 * r2);
      prev = std::move(cur);
      cur = std::move(nxt);
    }
  }
  if (m < 0) {
    cur = cur.conj();
    if (am % 2) cur = -cur;
  }
  return cur;
}

Complex racah_harmonic(long l, long m, const Real& theta, const Real& phi) {
  const mpfr_prec_t prec = theta.prec();
  Real st(prec), ct(prec), sp(prec), cp(prec);
  sin_cos(st, ct, theta);
  sin_cos(sp, cp, phi);
  return solid_racah(l, m, Vec3(st * cp, st * sp, ct));
}

}  // namespace hydroform::exactmath
