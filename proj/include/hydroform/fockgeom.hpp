#pragma once

#include "hydroform/angular.hpp"
#include "hydroform/errors.hpp"
#include "hydroform/real.hpp"

namespace hydroform::fockgeom {

/// 4-vector with components (v1, v2, v3, v0); v0 is the polar component of
/// the stereographic projection (the "energy axis").
struct Vec4 {
  Real v1, v2, v3, v0;

  explicit Vec4(mpfr_prec_t prec) : v1(prec), v2(prec), v3(prec), v0(prec) {}
  Vec4(Real a, Real b, Real c, Real d) : v1(std::move(a)), v2(std::move(b)), v3(std::move(c)), v0(std::move(d)) {}
  Real norm2() const { return v1 * v1 + v2 * v2 + v3 * v3 + v0 * v0; }
  Vec3 spatial() const { return Vec3(v1, v2, v3); }
};

/// Unit 4-vector (norm 1 up to rounding); produced by the projections.
using UnitVec4 = Vec4;

/// Screening pair: alpha scales the initial-state projection, beta the final
/// one; u = alpha/beta is the argument every multipole coefficient depends on.
struct Channel {
  Real alpha, beta, u;

  static Channel make(const Real& alpha, const Real& beta) {
    if (!(alpha > 0L) || !(beta > 0L) || !alpha.is_finite() || !beta.is_finite())
      throw BadQuantumNumbers("Channel: alpha and beta must be finite and positive");
    return Channel{alpha, beta, alpha / beta};
  }
  /// alpha = Z/ni, beta = Z/nf with ni, nf principal quantum numbers.
  static Channel hydrogen(const Real& z, long ni, long nf) {
    if (ni < 1 || nf < 1) throw BadQuantumNumbers("Channel: principal quantum numbers must be >= 1");
    return make(z / ni, z / nf);
  }
};

/// Derived momentum-transfer scalars.  At k = 0 and alpha = beta the
/// hyper-angle theta0 is undefined; (cos,sin) = (1,0) by convention and
/// `theta0_degenerate` is set.
struct Kinematics {
  Vec3 kvec;
  Real kmag;
  Real alpha, beta;
  Real k4;                  // sqrt((beta-alpha)^2 + k^2), 4D length of the transfer vector
  Real v;                   // k4 / (2 beta)
  Real w;                   // sqrt((alpha+beta)^2 + k^2) / (2 beta)
  Real cos_theta0, sin_theta0;
  Real x_geg;               // (w^2 - (u+1)/2) / (v w); 0 when v = 0
  Real theta, phi;          // spherical angles of kvec (0 when k = 0)
  bool theta0_degenerate = false;

  explicit Kinematics(mpfr_prec_t prec)
      : kvec(prec), kmag(prec), alpha(prec), beta(prec), k4(prec), v(prec), w(prec), cos_theta0(prec),
        sin_theta0(prec), x_geg(prec), theta(prec), phi(prec) {}
};

/// Stereographic image of a 3-momentum: (2 beta p, beta^2 - p^2)/(beta^2 + p^2).
UnitVec4 project_y(const Vec3& pvec, const Real& beta);

/// Same projection applied to p - k with scale alpha.
UnitVec4 project_x(const Vec3& pvec, const Vec3& kvec, const Real& alpha);

Kinematics kinematics_of(const Channel& ch, const Vec3& kvec);

/// Convenience: k of given magnitude along the polar axis.
Kinematics kinematics_polar(const Channel& ch, const Real& kmag);

/// Renormalized hyperspherical harmonic C_{nlm} on the unit 3-sphere,
/// evaluated from the 4-vector components (never forms the hyper-angle):
///   (2l)!! sqrt((2l+1)(n-l)!/(n+l+1)!) C^{l+1}_{n-l}(y0) * [r^l C_{lm}](y1,y2,y3).
/// C_{000} = 1 and C_{nlm} at the pole e = (0,0,0,1) is sqrt(n+1) delta_{l0} delta_{m0}.
Complex hsh_evaluate(long n, long l, long m, const UnitVec4& y);

/// Unit-normalized HSH: Y_{nlm} = (-1)^{n-l} sqrt((n+1)/(2 pi^2)) C_{nlm}.
Complex hsh_normalized(long n, long l, long m, const UnitVec4& y);

/// Solid HSH |v|^n C_{nlm}(v/|v|), a degree-n harmonic polynomial of the
/// components; accepts non-unit vectors (used by the Laplacian checks).
Complex hsh_solid(long n, long l, long m, const Vec4& v);

/// d(Omega_y)/d(p) = (2 beta / (beta^2 + p^2))^3.
Real surface_jacobian(const Vec3& pvec, const Real& beta);

}  // namespace hydroform::fockgeom
