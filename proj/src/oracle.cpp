#include "hydroform/oracle.hpp"

#include <cmath>

#include "hydroform/special.hpp"

namespace hydroform::oracle {

using exactmath::clebsch3d;
using exactmath::factorial_exact;
using exactmath::racah_harmonic;
using exactmath::spherical_bessel;
using fockgeom::hsh_evaluate;
using fockgeom::hsh_solid;
using fockgeom::Kinematics;
using fockgeom::project_x;
using fockgeom::project_y;
using pcoeff::PIndex;

void gauss_legendre(long order, mpfr_prec_t prec, std::vector<Real>& nodes, std::vector<Real>& weights) {
  nodes.assign(order, Real(prec));
  weights.assign(order, Real(prec));
  for (long i = 0; i < order; ++i) {
    // Newton from the Chebyshev-angle estimate; quadratic convergence makes
    // ~log2(prec) iterations ample
    double guess = std::cos(M_PI * (static_cast<double>(i) + 0.75) / (static_cast<double>(order) + 0.5));
    Real x = Real::of(guess, prec);
    Real dp(prec);
    for (int it = 0; it < 64; ++it) {
      Real p0 = Real::of(1L, prec), p1 = x;
      for (long k = 2; k <= order; ++k) {
        Real pk = (Real::of(2 * k - 1, prec) * x * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(pk);
      }
      dp = order * (x * p1 - p0) / (x * x - 1);
      Real step = p1 / dp;
      x -= step;
      if (abs(step) < pow2(-static_cast<long>(prec), prec)) break;
    }
    // converged x; recompute derivative at the root for the weight
    Real p0 = Real::of(1L, prec), p1 = x;
    for (long k = 2; k <= order; ++k) {
      Real pk = (Real::of(2 * k - 1, prec) * x * p1 - (k - 1) * p0) / k;
      p0 = std::move(p1);
      p1 = std::move(pk);
    }
    dp = order * (x * p1 - p0) / (x * x - 1);
    nodes[i] = x;
    weights[i] = 2L / ((1 - x * x) * dp * dp);
  }
}

namespace {

constexpr long kGlOrder = 40;

// coefficients of Phi(-m, c; x) as a polynomial in x, exact rationals
std::vector<Real> kummer_coeffs(long m, long c, mpfr_prec_t prec) {
  std::vector<Real> out;
  out.reserve(static_cast<size_t>(m + 1));
  Rational cur(1);
  out.push_back(Real::of(cur, prec));
  for (long k = 0; k < m; ++k) {
    cur = cur * Rational(ExactInt(k - m), ExactInt(c + k) * ExactInt(k + 1));
    out.push_back(Real::of(cur, prec));
  }
  return out;
}

Real horner(const std::vector<Real>& coeffs, const Real& x, mpfr_prec_t prec) {
  Real acc = Real::of(0L, prec);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

}  // namespace

RadialQuadrature::RadialQuadrature(const Channel& ch, long n, long np, const Real& kmag,
                                   const PrecisionContext& ctx, int target_digits)
    : ch_(ch), n_(n), np_(np), l2max_(n + np + 1), powmax_(n + np + 2), kmag_(kmag), ctx_(ctx),
      target_(target_digits), cutoff_(ctx.bits), floor_(ctx.bits) {
  const mpfr_prec_t prec = ctx.bits;
  const double s = (ch.alpha + ch.beta).to_double();
  const double npow = static_cast<double>(powmax_ + n_ + np_);  // degree bound of the polynomial part
  // cutoff from the envelope r^npow e^{-s r}: tail below 10^-(target+12)
  // relative to the envelope peak
  const double peak_log = npow * (std::log(std::max(npow, 1.0) / s)) - npow;
  double r = std::max(2.0 * (npow + 2.0) / s, 2.0);
  const double drop = (static_cast<double>(target_) + 12.0) * std::log(10.0);
  while (npow * std::log(r) - s * r + std::log(2.0 / s) > peak_log - drop) r *= 1.125;
  cutoff_ = Real::of(r, prec);

  const double k = kmag.to_double();
  double width = std::min(6.0 / s, r / 4.0);
  if (k > 0) width = std::min(width, 4.0 * M_PI / k);
  base_panels_ = std::max(4L, static_cast<long>(std::ceil(r / width)));

  gauss_legendre(kGlOrder, prec, gl_x_, gl_w_);
  levels_.push_back(build_level(base_panels_));
  levels_.push_back(build_level(2 * base_panels_));
  floor_ = Real::parse("1e" + std::to_string(-(target_ + 12)), prec) *
           exp(Real::of(peak_log, prec));
}

RadialQuadrature::Level RadialQuadrature::build_level(long panels) const {
  const mpfr_prec_t prec = ctx_.bits;
  Level lv;
  const size_t total = static_cast<size_t>(panels * kGlOrder);
  lv.r.reserve(total);
  lv.wexp.reserve(total);
  Real h = cutoff_ / panels;
  Real s = ch_.alpha + ch_.beta;
  for (long p = 0; p < panels; ++p) {
    Real lo = h * p;
    Real mid = lo + h / 2;
    Real half = h / 2;
    for (long i = 0; i < kGlOrder; ++i) {
      Real r = mid + half * gl_x_[i];
      lv.wexp.push_back(gl_w_[i] * half * exp(-(s * r)));
      lv.r.push_back(std::move(r));
    }
  }

  lv.rpow.assign(static_cast<size_t>(powmax_ + 1), {});
  lv.rpow[0].assign(lv.r.size(), Real::of(1L, prec));
  for (long j = 1; j <= powmax_; ++j) {
    lv.rpow[j].reserve(lv.r.size());
    for (size_t i = 0; i < lv.r.size(); ++i) lv.rpow[j].push_back(lv.rpow[j - 1][i] * lv.r[i]);
  }

  // spherical Bessel table: forward recurrence from j0, j1 where stable
  // (x > l2max + 2), otherwise downward from two robust seed values
  lv.jl.assign(static_cast<size_t>(l2max_ + 1), {});
  for (auto& row : lv.jl) row.assign(lv.r.size(), Real(prec));
  if (kmag_.is_zero()) {
    for (size_t i = 0; i < lv.r.size(); ++i) lv.jl[0][i] = Real::of(1L, prec);
  } else {
    for (size_t i = 0; i < lv.r.size(); ++i) {
      Real x = kmag_ * lv.r[i];
      if (x > Real::of(l2max_ + 2, prec)) {
        Real sn(prec), cn(prec);
        sin_cos(sn, cn, x);
        lv.jl[0][i] = sn / x;
        if (l2max_ >= 1) lv.jl[1][i] = sn / (x * x) - cn / x;
        for (long l = 1; l < l2max_; ++l)
          lv.jl[l + 1][i] = Real::of(2 * l + 1, prec) / x * lv.jl[l][i] - lv.jl[l - 1][i];
      } else {
        Real top = spherical_bessel(l2max_ + 1, x);
        Real below = spherical_bessel(l2max_, x);
        lv.jl[l2max_][i] = below;
        for (long l = l2max_; l >= 1; --l) {
          Real lower = Real::of(2 * l + 1, prec) / x * below - top;
          top = std::move(below);
          below = std::move(lower);
          lv.jl[l - 1][i] = below;
        }
      }
    }
  }

  lv.phi_a.assign(static_cast<size_t>(n_ + 1), {});
  lv.phi_b.assign(static_cast<size_t>(np_ + 1), {});
  for (long l = 0; l <= n_; ++l) {
    auto coeffs = kummer_coeffs(n_ - l, 2 * l + 2, prec);
    lv.phi_a[l].reserve(lv.r.size());
    for (size_t i = 0; i < lv.r.size(); ++i) lv.phi_a[l].push_back(horner(coeffs, 2 * ch_.alpha * lv.r[i], prec));
  }
  for (long lp = 0; lp <= np_; ++lp) {
    auto coeffs = kummer_coeffs(np_ - lp, 2 * lp + 2, prec);
    lv.phi_b[lp].reserve(lv.r.size());
    for (size_t i = 0; i < lv.r.size(); ++i) lv.phi_b[lp].push_back(horner(coeffs, 2 * ch_.beta * lv.r[i], prec));
  }
  return lv;
}

Real RadialQuadrature::apply(const Level& lv, long l, long lp, long l2) const {
  const mpfr_prec_t prec = ctx_.bits;
  Real sum = Real::of(0L, prec);
  const auto& pw = lv.rpow[l + lp + 2];
  const auto& jl = lv.jl[l2];
  const auto& fa = lv.phi_a[l];
  const auto& fb = lv.phi_b[lp];
  for (size_t i = 0; i < lv.r.size(); ++i) sum += lv.wexp[i] * pw[i] * jl[i] * fa[i] * fb[i];
  return sum;
}

Real RadialQuadrature::integrate(long l, long lp, long l2) {
  if (l < 0 || l > n_ || lp < 0 || lp > np_ || l2 < 0 || l2 > l2max_)
    throw IndexViolation("RadialQuadrature: indices out of range");
  const mpfr_prec_t prec = ctx_.bits;
  Real tol = Real::parse("1e" + std::to_string(-target_), prec);
  Real prev = apply(levels_[0], l, lp, l2);
  for (size_t lev = 1;; ++lev) {
    if (lev >= levels_.size()) {
      if (lev > 8) throw NoConvergence("radial_quadrature: refinement cap reached");
      levels_.push_back(build_level(base_panels_ << lev));
    }
    Real cur = apply(levels_[lev], l, lp, l2);
    if (abs(cur - prev) <= tol * max(abs(cur), floor_)) return cur;
    prev = std::move(cur);
  }
}

Real radial_quadrature(const TransitionSpec& t, long l2, const Real& kmag, const PrecisionContext& ctx,
                       int target_digits) {
  PIndex idx{t.initial.n, t.initial.l, t.final_state.n, t.final_state.l, l2};
  idx.require();
  RadialQuadrature q(t.channel, t.initial.n, t.final_state.n, kmag, ctx, target_digits);
  return q.integrate(t.initial.l, t.final_state.l, l2);
}

Complex s3_quadrature(const std::function<Complex(const UnitVec4&)>& f, long n_max, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  const long nchi = n_max + 2;
  const long nth = n_max + 2;
  const long nphi = 2 * n_max + 3;
  Real pi = Real::pi(prec);

  std::vector<Real> tx, tw;
  gauss_legendre(nth, prec, tx, tw);

  Complex total(prec);
  for (long ic = 1; ic <= nchi; ++ic) {
    // Chebyshev second kind: cos(chi) node with weight pi/(n+1) sin^2
    Real ang = pi * ic / (nchi + 1);
    Real schi(prec), cchi(prec);
    sin_cos(schi, cchi, ang);
    Real wchi = pi / (nchi + 1) * schi * schi;
    for (long it = 0; it < nth; ++it) {
      const Real& cth = tx[it];
      Real sth = sqrt((1 - cth) * (1 + cth));
      for (long ip = 0; ip < nphi; ++ip) {
        Real phi = 2 * pi * ip / nphi;
        Real sph(prec), cph(prec);
        sin_cos(sph, cph, phi);
        UnitVec4 y(schi * sth * cph, schi * sth * sph, schi * cth, cchi);
        total = total + f(y) * (wchi * tw[it] * (2 * pi / nphi));
      }
    }
  }
  return total;
}

ExpansionCheck expansion_check(long n, long l, long m, const Channel& ch, const Vec3& kvec, const Vec3& pvec,
                               long n3_max, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Vec3 qvec = pvec - kvec;
  Real q2 = qvec.norm2() + ch.alpha * ch.alpha;
  if (q2.is_zero()) throw DegenerateQ("expansion_check: shifted 4-vector vanishes");
  Real p2 = pvec.norm2() + ch.beta * ch.beta;

  Complex lhs = hsh_evaluate(n, l, m, project_x(pvec, kvec, ch.alpha)) * (1L / (q2 * q2));

  Kinematics kin = fockgeom::kinematics_of(ch, kvec);
  UnitVec4 y = project_y(pvec, ch.beta);
  Complex rhs(prec);
  for (long n3 = 0; n3 <= n3_max; ++n3) {
    for (long l3 = 0; l3 <= n3; ++l3) {
      for (long l2 = std::labs(l - l3); l2 <= l + l3; l2 += 2) {
        Real b = formfactor::coeff_B(PIndex{n, l, n3, l3, l2}, kin, ch.u, ctx);
        if (b.is_zero()) continue;
        Real c1 = clebsch3d(l, 0, l2, 0, l3, 0, ctx);
        if (c1.is_zero()) continue;
        // real phase left after folding the paper's HSH i-factors into the
        // real-valued harmonics used here
        long sgn = ((n + n3) % 2 ? -1 : 1) * ((l + l2) % 2 ? -1 : 1) * (((l + l2 + l3) / 2) % 2 ? -1 : 1);
        for (long m2 = -l2; m2 <= l2; ++m2) {
          long m3 = m - m2;
          if (std::labs(m3) > l3) continue;
          Real c2 = clebsch3d(l2, m2, l3, m3, l, m, ctx);
          if (c2.is_zero()) continue;
          Complex angular = racah_harmonic(l2, m2, kin.theta, kin.phi) * hsh_evaluate(n3, l3, m3, y);
          rhs = rhs + angular * (Real::of(sgn, prec) * b * c1 * c2);
        }
      }
    }
  }
  rhs = rhs * (1L / (2 * ch.alpha * ch.alpha * p2));
  return ExpansionCheck{std::move(lhs), std::move(rhs)};
}

namespace {

// f(P) = |v|^{-2} * solid HSH of the stereographic image of the free
// 4-vector P (scale a, pole offset e0)
Complex stereo_harmonic_over_r2(long n, long l, long m, const Real& scale, const Vec4& P) {
  Real r2 = P.norm2();
  Vec4 img(2 * scale * P.v1 / r2, 2 * scale * P.v2 / r2, 2 * scale * P.v3 / r2, 2 * scale * P.v0 / r2 - 1);
  return hsh_solid(n, l, m, img) * (1L / r2);
}

}  // namespace

LaplaceResidual laplace_fd_check(long n, long l, long m, const Channel& ch, const Vec3& kvec, const Vec3& pvec,
                                 const Real& h, const PrecisionContext& ctx) {
  if (!(h > 0L)) throw SingularPoint("laplace_fd_check: h must be positive");
  const mpfr_prec_t prec = ctx.bits;
  Vec3 qvec = pvec - kvec;
  Real p2 = pvec.norm2() + ch.beta * ch.beta;
  Real q2 = qvec.norm2() + ch.alpha * ch.alpha;
  if (sqrt(p2) <= 2 * h || sqrt(q2) <= 2 * h)
    throw SingularPoint("laplace_fd_check: evaluation point too close to a singular point");

  LaplaceResidual out{Real::of(0L, prec), Real::of(0L, prec)};
  Real h2 = h * h;
  for (int family = 0; family < 2; ++family) {
    const Real& scale = family == 0 ? ch.beta : ch.alpha;
    Vec4 base = family == 0 ? Vec4(pvec.x, pvec.y, pvec.z, ch.beta) : Vec4(qvec.x, qvec.y, qvec.z, ch.alpha);
    Complex center = stereo_harmonic_over_r2(n, l, m, scale, base);
    Complex lap(prec);
    Real scale_axis = Real::of(0L, prec);
    for (int axis = 0; axis < 4; ++axis) {
      Vec4 up = base, dn = base;
      Real& uc = axis == 0 ? up.v1 : axis == 1 ? up.v2 : axis == 2 ? up.v3 : up.v0;
      Real& dc = axis == 0 ? dn.v1 : axis == 1 ? dn.v2 : axis == 2 ? dn.v3 : dn.v0;
      uc += h;
      dc -= h;
      Complex second = (stereo_harmonic_over_r2(n, l, m, scale, up) - center - center +
                        stereo_harmonic_over_r2(n, l, m, scale, dn));
      lap = lap + second;
      scale_axis = max(scale_axis, second.abs());
    }
    out.residual = max(out.residual, lap.abs() / h2);
    out.scale = max(out.scale, scale_axis / h2);
  }
  return out;
}

}  // namespace hydroform::oracle
