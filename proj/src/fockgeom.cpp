#include "hydroform/fockgeom.hpp"

#include <cstdlib>

#include "hydroform/special.hpp"

namespace hydroform::fockgeom {

using exactmath::double_factorial_exact;
using exactmath::factorial_exact;
using exactmath::gegenbauer;
using exactmath::gegenbauer_scaled;
using exactmath::solid_racah;

UnitVec4 project_y(const Vec3& pvec, const Real& beta) {
  Real p2 = pvec.norm2();
  Real den = beta * beta + p2;
  Real s = 2 * beta / den;
  return UnitVec4(s * pvec.x, s * pvec.y, s * pvec.z, (beta * beta - p2) / den);
}

UnitVec4 project_x(const Vec3& pvec, const Vec3& kvec, const Real& alpha) {
  return project_y(pvec - kvec, alpha);
}

Kinematics kinematics_of(const Channel& ch, const Vec3& kvec) {
  const mpfr_prec_t prec = ch.beta.prec();
  Kinematics kin(prec);
  kin.kvec = kvec;
  kin.alpha = ch.alpha;
  kin.beta = ch.beta;
  Real k2 = kvec.norm2();
  kin.kmag = sqrt(k2);
  Real d = ch.beta - ch.alpha;
  kin.k4 = sqrt(d * d + k2);
  kin.v = kin.k4 / (2 * ch.beta);
  Real s = ch.alpha + ch.beta;
  kin.w = sqrt(s * s + k2) / (2 * ch.beta);
  if (kin.k4.is_zero()) {
    // alpha = beta and k = 0: theta0 is 0/0
    kin.theta0_degenerate = true;
    kin.cos_theta0 = Real::of(1L, prec);
    kin.sin_theta0 = Real::of(0L, prec);
  } else {
    kin.cos_theta0 = d / kin.k4;
    kin.sin_theta0 = kin.kmag / kin.k4;
  }
  if (kin.v.is_zero()) {
    kin.x_geg = Real::of(0L, prec);
  } else {
    kin.x_geg = (kin.w * kin.w - (ch.u + 1) / 2) / (kin.v * kin.w);
  }
  if (kin.kmag.is_zero()) {
    kin.theta = Real::of(0L, prec);
    kin.phi = Real::of(0L, prec);
  } else {
    kin.theta = acos(kvec.z / kin.kmag);
    kin.phi = (kvec.x.is_zero() && kvec.y.is_zero()) ? Real::of(0L, prec) : atan2(kvec.y, kvec.x);
  }
  return kin;
}

Kinematics kinematics_polar(const Channel& ch, const Real& kmag) {
  const mpfr_prec_t prec = ch.beta.prec();
  Real zero = Real::of(0L, prec);
  return kinematics_of(ch, Vec3(zero, zero, kmag));
}

namespace {

void check_qn(long n, long l, long m) {
  if (n < 0 || l < 0 || l > n || std::abs(m) > l)
    throw BadQuantumNumbers("hsh: need 0 <= l <= n and |m| <= l");
}

Real hsh_prefactor(long n, long l, mpfr_prec_t prec) {
  Rational q(ExactInt(2 * l + 1) * factorial_exact(n - l), factorial_exact(n + l + 1));
  return Real::of(double_factorial_exact(2 * l), prec) * sqrt(Real::of(q, prec));
}

}  // namespace

Complex hsh_evaluate(long n, long l, long m, const UnitVec4& y) {
  check_qn(n, l, m);
  const mpfr_prec_t prec = y.v0.prec();
  return solid_racah(l, m, y.spatial()) * (hsh_prefactor(n, l, prec) * gegenbauer(l + 1, n - l, y.v0));
}

Complex hsh_normalized(long n, long l, long m, const UnitVec4& y) {
  check_qn(n, l, m);
  const mpfr_prec_t prec = y.v0.prec();
  Real pi = Real::pi(prec);
  Real scale = sqrt(Real::of(n + 1, prec) / (2 * pi * pi));
  if ((n - l) % 2) scale = -scale;
  return hsh_evaluate(n, l, m, y) * scale;
}

Complex hsh_solid(long n, long l, long m, const Vec4& v) {
  check_qn(n, l, m);
  const mpfr_prec_t prec = v.v0.prec();
  return solid_racah(l, m, v.spatial()) *
         (hsh_prefactor(n, l, prec) * gegenbauer_scaled(l + 1, n - l, v.v0, v.norm2()));
}

Real surface_jacobian(const Vec3& pvec, const Real& beta) {
  Real den = beta * beta + pvec.norm2();
  return pow_si(2 * beta / den, 3);
}

}  // namespace hydroform::fockgeom
