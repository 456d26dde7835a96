#pragma once

#include <vector>

#include "hydroform/errors.hpp"
#include "hydroform/real.hpp"

namespace hydroform::pcoeff {

/// Index tuple of a multipole coefficient P^{(l2)}_{n,l;n3,l3}.
/// Admissible when l <= n, l3 <= n3 and l - l2 + l3 + 1 >= 0; form-factor
/// use additionally needs |l-l3| <= l2 <= l+l3 with l+l2+l3 even.
struct PIndex {
  long n = 0, l = 0, n3 = 0, l3 = 0, l2 = 0;

  long inner_order() const { return l - l2 + l3 + 1; }  // order of the innermost derivative
  long qmax() const { return n + n3 - l - l3; }
  bool admissible() const {
    return n >= 0 && l >= 0 && n3 >= 0 && l3 >= 0 && l2 >= 0 && l <= n && l3 <= n3 && inner_order() >= 0;
  }
  void require() const {
    if (!admissible()) throw IndexViolation("PIndex: need l <= n, l3 <= n3, l-l2+l3+1 >= 0");
  }
  PIndex swapped() const { return PIndex{n3, l3, n, l, l2}; }
  friend bool operator==(const PIndex& a, const PIndex& b) {
    return a.n == b.n && a.l == b.l && a.n3 == b.n3 && a.l3 == b.l3 && a.l2 == b.l2;
  }
};

enum class Backend { series, gegenbauer, closed_1s, closed_dipole };

const char* backend_name(Backend b);

struct PValue {
  PIndex index;
  Real u, w;
  Real value;
  Backend backend = Backend::series;
};

/// Truncated bivariate power series in (t, tau): dense coefficient table up
/// to orders (tmax, taumax) inclusive.  All arithmetic is exact up to the
/// stated truncation orders.
class BiSeries {
 public:
  BiSeries(long tmax, long taumax, mpfr_prec_t prec);

  long tmax() const { return tmax_; }
  long taumax() const { return taumax_; }
  const Real& coeff(long i, long j) const { return c_[idx(i, j)]; }
  Real& at(long i, long j) { return c_[idx(i, j)]; }
  Real value_at_zero() const { return coeff(0, 0); }

  BiSeries add(const BiSeries& o) const;
  /// product truncated to orders (tcap, taucap)
  BiSeries mul(const BiSeries& o, long tcap, long taucap) const;
  BiSeries derivative_t(long k) const;
  BiSeries derivative_tau(long k) const;

  /// (1+t)^e as a series in t alone, truncated at tcap.
  static BiSeries one_plus_t_pow(long e, long tcap, mpfr_prec_t prec);
  /// (c+tau)^e as a series in tau alone, truncated at taucap.
  static BiSeries shifted_tau_pow(const Real& c, long e, long taucap);
  /// Expansion of [w^2 + (1+u)(t+tau) + (t+tau)^2]^{-(l2+1)} through the
  /// Gegenbauer generating function: coefficient of t^i tau^j is
  /// binom(i+j,i) w^{-(2l2+2+i+j)} C^{l2+1}_{i+j}(-(u+1)/(2w)).
  static BiSeries gegenbauer_kernel(long l2, const Real& u, const Real& w, long tcap, long taucap);

 private:
  size_t idx(long i, long j) const { return static_cast<size_t>(i) * static_cast<size_t>(taumax_ + 1) + j; }
  long tmax_, taumax_;
  std::vector<Real> c_;
};

/// Series-extraction backend: the three-fold derivative representation
/// evaluated by BiSeries arithmetic.  Truncation orders are exact, the
/// extraction is a finite operation.
PValue p_series(const PIndex& idx, const Real& u, const Real& w, const PrecisionContext& ctx);

/// Gegenbauer-sum backend: u^{l+1} w^{-(l+l2+l3+3)} sum_q w^{-q} C_q(u)
/// C^{l2+1}_{l-l2+l3+q+1}(-(u+1)/(2w)), q up to n+n3-l-l3.
PValue p_gegenbauer(const PIndex& idx, const Real& u, const Real& w, const PrecisionContext& ctx);

/// Polynomial coefficient C_q(u) of the Gegenbauer backend, exact-integer
/// internals evaluated at u.
Real c_q(const PIndex& idx, long q, const Real& u, const PrecisionContext& ctx);

/// Closed form for transitions from the ground state: P^{(l3)}_{0,0;n3,l3}
/// as a combination of two Gegenbauer polynomials of the kinematic argument.
PValue p_1s(long n3, long l3, const Real& u, const Real& w, const PrecisionContext& ctx);

/// Monopole dipole-limit coefficient P^{(0)}_{n,l;n3,l}(u) at w = (u+1)/2 in
/// terms of a terminating 2F1.  At u = 1 the exact limit is used.
PValue p_dipole0(long n, long l, long n3, const Real& u, const PrecisionContext& ctx);

/// f_k coefficient of the dipole expansion (k = 0, 1, 2).  Exactly zero when
/// the linear prefactor (n+1)u - n3 - 2 + k vanishes, which is the hydrogen
/// u = (n3+1)/(n+1) case at k = 1.
Real dipole_f(int k, long n, long l, long n3, const Real& u, const PrecisionContext& ctx);

/// Dipole coefficient P^{(1)}_{n,l;n3,l-1}(u) at w = (u+1)/2; the bracket of
/// three f_k terms.  Throws DegenerateU at u = 1.
PValue p_dipole1(long n, long l, long n3, const Real& u, const PrecisionContext& ctx);

/// Index/argument swap under which P is invariant:
///   P^{(l2)}_{n,l;n3,l3}(u,w) = multiplier * P^{(l2)}_{n3,l3;n,l}(1/u, w/u)
/// with multiplier u^{-(l2+1)}.
struct SymmetryMap {
  PIndex swapped;
  Real u_swapped, w_swapped, multiplier;
};
SymmetryMap p_symmetry_map(const PIndex& idx, const Real& u, const Real& w);

/// Both general backends with an agreement check at 2^{-bits/2} relative;
/// on disagreement both are retried at doubled precision (at most `retries`
/// doublings) until they agree.
PValue p_auto(const PIndex& idx, const Real& u, const Real& w, const PrecisionContext& ctx, int retries = 2);

}  // namespace hydroform::pcoeff
