#pragma once

#include "hydroform/errors.hpp"
#include "hydroform/real.hpp"

namespace hydroform {

struct Vec3 {
  Real x, y, z;

  explicit Vec3(mpfr_prec_t prec) : x(prec), y(prec), z(prec) {}
  Vec3(Real xx, Real yy, Real zz) : x(std::move(xx)), y(std::move(yy)), z(std::move(zz)) {}
  Real norm2() const { return x * x + y * y + z * z; }
  Real norm() const { return sqrt(norm2()); }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
};

namespace exactmath {

/// 3D Clebsch-Gordan coefficient C^{l m}_{l1 m1, l2 m2} (Condon-Shortley),
/// Racah's closed formula with exact integer internals: the alternating sum
/// is an exact rational, only one square root is rounded.  Returns 0 when a
/// selection rule fails.
Real clebsch3d(long l1, long m1, long l2, long m2, long l, long m, const PrecisionContext& ctx);

/// Regular solid harmonic r^l C_{lm}(theta,phi) evaluated from Cartesian
/// components (no trig calls, stable at the poles).
Complex solid_racah(long l, long m, const Vec3& v);

/// Racah-normalized spherical harmonic C_{lm}(theta,phi) = sqrt(4pi/(2l+1)) Y_{lm}.
Complex racah_harmonic(long l, long m, const Real& theta, const Real& phi);

}  // namespace exactmath
}  // namespace hydroform
