#pragma once

#include <vector>

#include "hydroform/fockgeom.hpp"
#include "hydroform/pcoeff.hpp"

namespace hydroform::formfactor {

using fockgeom::Channel;
using fockgeom::Kinematics;
using pcoeff::PIndex;

/// Bound-state label in the shifted convention n = principal - 1
/// (so hydrogen 1s is n = 0, l = 0).
struct BoundLabel {
  long n = 0, l = 0, m = 0;

  void require() const {
    if (n < 0 || l < 0 || l > n || std::labs(m) > l)
      throw BadQuantumNumbers("BoundLabel: need 0 <= l <= n and |m| <= l");
  }
};

enum class Mode { hydrogen, sturmian };

/// Initial/final state pair plus the screening channel.  Hydrogen mode
/// derives alpha = Z/(n+1), beta = Z/(n'+1); sturmian mode takes alpha and
/// beta verbatim.
struct TransitionSpec {
  BoundLabel initial, final_state;
  Channel channel;
  Mode mode;

  static TransitionSpec hydrogen(const Real& z, const BoundLabel& i, const BoundLabel& f) {
    i.require();
    f.require();
    return TransitionSpec{i, f, Channel::hydrogen(z, i.n + 1, f.n + 1), Mode::hydrogen};
  }
  static TransitionSpec sturmian(const Real& alpha, const Real& beta, const BoundLabel& i, const BoundLabel& f) {
    i.require();
    f.require();
    return TransitionSpec{i, f, Channel::make(alpha, beta), Mode::sturmian};
  }
};

/// Which P backend feeds the assembly.
enum class PRoute { series, gegenbauer, auto_check };

Real p_route(const PIndex& idx, const Real& u, const Real& w, const PrecisionContext& ctx, PRoute route);

/// Multipole coefficient
///   B^{(l2)}_{n,l;n3,l3} = -(k/beta)^{l2} l2!(2l2+1)/(2(n+1))
///        sqrt((n+l+1)!(n3+l3+1)!/((n-l)!(n3-l3)!)) P^{(l2)}_{n,l;n3,l3}(u,w).
Real coeff_B(const PIndex& idx, const Kinematics& kin, const Real& u, const PrecisionContext& ctx,
             PRoute route = PRoute::series);

struct FormFactor {
  Complex value;
  Kinematics kin;
  std::vector<std::pair<long, Complex>> l2_terms;  // value = sum of partials
};

/// Form factor <final| exp(i k.r) |initial>, assembled from the multipole
/// coefficients:
///   F = sqrt(alpha (n+1) / (beta (n'+1))) sum_{l2=|l-l'|..l+l', step 2}
///       phi(l2) C^{l'0}_{l0,l2 0} C^{lm}_{l2 m2, l'm'} C_{l2 m2}(theta,phi) B^{(l2)},
/// m2 = m - m'.  phi(l2) = (-1)^{(l2+|l-l'|)/2} replaces the raw i^{l2}
/// bookkeeping: F carries a per-transition global phase (-i)^{|l-l'|}
/// relative to the bare matrix element, chosen so polar-axis m = m' values
/// are real with the sign of the lowest-multipole radial integral.  |F| and
/// the GOS are unaffected.
FormFactor form_factor(const TransitionSpec& t, const Vec3& kvec, const PrecisionContext& ctx,
                       PRoute route = PRoute::series);

/// The bare radial integral
///   int_0^inf r^{l+l'+2} e^{-(alpha+beta) r} j_{l2}(k r)
///       Phi(l'-n', 2l'+2; 2 beta r) Phi(l-n, 2l+2; 2 alpha r) dr
/// evaluated in closed form:
///   (-1)^{l+l2+l'+1} l2!(2l+1)!(2l'+1)! / ((2a)^{l+1}(2b)^{l'+2}) (k/b)^{l2} P.
Real radial_matrix_element(const TransitionSpec& t, long l2, const Real& kmag, const PrecisionContext& ctx,
                           PRoute route = PRoute::series);

/// Ground-state radial form factor
///   int R_{0,0}(alpha,r) j_{l3}(k r) R_{n3,l3}(beta,r) r^2 dr
///   = -(l3!/2) (k/beta)^{l3} sqrt(alpha (n3+l3+1)! / (beta (n3+1)(n3-l3)!)) P^{(l3)}_{0,0;n3,l3},
/// with P from the two-Gegenbauer closed form.
Real form_factor_1s(long n3, long l3, const Channel& ch, const Real& kmag, const PrecisionContext& ctx);

/// Solid-harmonic expansion coefficient D_{n2 n3, l l3}(alpha, beta) in its
/// closed 3F2 form.  Valid inside the convergence region |alpha| < |beta|,
/// (alpha-beta)^2 + k^2 < 2 beta; ConvergenceRegionViolated otherwise.
Real coeff_D(long n, long n2, long n3, long l, long l3, long l2, const Channel& ch, const Real& kmag,
             const PrecisionContext& ctx);

/// The finite n1-sum form of the same coefficient (cross-check route).
Real coeff_D_sum(long n, long n2, long n3, long l, long l3, long l2, const Channel& ch, const Real& kmag,
                 const PrecisionContext& ctx);

struct GosRow {
  Real lnk, k;
  Real absF2;                    // |F|^2 summed over final m'
  std::vector<Real> l2_partials; // per-l2 |partial|^2, same m' sum
};

struct GosTable {
  std::vector<long> l2_values;
  std::vector<GosRow> rows;
};

/// |F|^2 scan over a log-k grid (one row per grid point, deterministic
/// order).  m' is summed at fixed initial m; with k on the polar axis only
/// m' = m survives.
GosTable gos_scan(const TransitionSpec& t, const std::vector<Real>& lnk_grid, const PrecisionContext& ctx,
                  PRoute route = PRoute::series);

}  // namespace hydroform::formfactor
