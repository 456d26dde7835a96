#pragma once

#include <functional>
#include <vector>

#include "hydroform/formfactor.hpp"

namespace hydroform::oracle {

using fockgeom::Channel;
using fockgeom::UnitVec4;
using fockgeom::Vec4;
using formfactor::TransitionSpec;

/// Gauss-Legendre nodes and weights on [-1, 1] at full working precision
/// (Newton refinement of the Legendre roots).
void gauss_legendre(long order, mpfr_prec_t prec, std::vector<Real>& nodes, std::vector<Real>& weights);

/// Panelled Gauss-Legendre evaluation of the bound-bound radial integrals
///   int_0^inf r^{l+l'+2} e^{-(a+b) r} j_{l2}(k r) Phi(l'-n',2l'+2;2br) Phi(l-n,2l+2;2ar) dr
/// for every (l <= n, l' <= n', l2 <= l+l'+1) of one (channel, n, n', k)
/// family.  Node tables (exponential, Bessel, Kummer polynomials, powers)
/// are shared across the family; each integral is refined by panel halving
/// until two successive levels agree to 10^-target relative.
class RadialQuadrature {
 public:
  RadialQuadrature(const Channel& ch, long n, long np, const Real& kmag, const PrecisionContext& ctx,
                   int target_digits = 12);

  /// Integral for one admissible (l, l', l2); NoConvergence if panel halving
  /// stalls before the refinement cap.
  Real integrate(long l, long lp, long l2);

  Real cutoff() const { return cutoff_; }

 private:
  struct Level {
    std::vector<Real> r;
    std::vector<Real> wexp;                 // GL weight * exp(-s r)
    std::vector<std::vector<Real>> jl;      // [l2][node]
    std::vector<std::vector<Real>> rpow;    // [power][node]
    std::vector<std::vector<Real>> phi_a;   // [l][node]
    std::vector<std::vector<Real>> phi_b;   // [l'][node]
  };
  Level build_level(long panels) const;
  Real apply(const Level& lv, long l, long lp, long l2) const;

  Channel ch_;
  long n_, np_, l2max_, powmax_;
  Real kmag_;
  PrecisionContext ctx_;
  int target_;
  Real cutoff_;      // upper integration limit R
  long base_panels_;
  std::vector<Real> gl_x_, gl_w_;
  std::vector<Level> levels_;
  Real floor_;       // absolute comparison floor from the envelope scale
};

/// One-off convenience wrapper around RadialQuadrature.
Real radial_quadrature(const TransitionSpec& t, long l2, const Real& kmag, const PrecisionContext& ctx,
                       int target_digits = 12);

/// Product Gauss quadrature over the 3-sphere: Chebyshev (second kind) in
/// the hyper-angle, Gauss-Legendre in cos(theta), uniform in phi.  Exact for
/// HSH products up to rank n_max (node counts sized for polynomial degree
/// 2 n_max + 2).
Complex s3_quadrature(const std::function<Complex(const UnitVec4&)>& f, long n_max, const PrecisionContext& ctx);

struct ExpansionCheck {
  Complex lhs;  // q^{-4} C_{nlm}(x) evaluated directly
  Complex rhs;  // n3-truncated multipole series on the y-sphere
};

/// Pointwise comparison of the translated-harmonic expansion: the direct
/// value of q^{-4} C_{nlm}(x) against its series over C_{n3 l3 m3}(y)
/// truncated at n3_max.  Throws DegenerateQ when the shifted 4-vector
/// vanishes.
ExpansionCheck expansion_check(long n, long l, long m, const Channel& ch, const Vec3& kvec, const Vec3& pvec,
                               long n3_max, const PrecisionContext& ctx);

struct LaplaceResidual {
  Real residual;  // |finite-difference 4D Laplacian|, worst of the two families
  Real scale;     // largest per-axis second-difference magnitude
};

/// Central-difference 4D Laplacian of p^{-2} C_n(y(p)) and q^{-2} C_n(x(q))
/// at the physical slice point (pvec, beta); both vanish analytically, so
/// the residual measures O(h^2) discretization error only.
LaplaceResidual laplace_fd_check(long n, long l, long m, const Channel& ch, const Vec3& kvec, const Vec3& pvec,
                                 const Real& h, const PrecisionContext& ctx);

}  // namespace hydroform::oracle
