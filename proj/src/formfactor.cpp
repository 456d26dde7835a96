#include "hydroform/formfactor.hpp"

#include "hydroform/special.hpp"

namespace hydroform::formfactor {

using exactmath::clebsch3d;
using exactmath::factorial_exact;
using exactmath::racah_harmonic;
using fockgeom::kinematics_of;
using fockgeom::kinematics_polar;
using pcoeff::p_auto;
using pcoeff::p_gegenbauer;
using pcoeff::p_series;

Real p_route(const PIndex& idx, const Real& u, const Real& w, const PrecisionContext& ctx, PRoute route) {
  switch (route) {
    case PRoute::series: return p_series(idx, u, w, ctx).value;
    case PRoute::gegenbauer: return p_gegenbauer(idx, u, w, ctx).value;
    case PRoute::auto_check: return p_auto(idx, u, w, ctx).value;
  }
  return Real(ctx.bits);
}

Real coeff_B(const PIndex& idx, const Kinematics& kin, const Real& u, const PrecisionContext& ctx, PRoute route) {
  idx.require();
  const mpfr_prec_t prec = ctx.bits;
  if (idx.l2 > 0 && kin.kmag.is_zero()) return Real::of(0L, prec);
  Rational fac(factorial_exact(idx.l2) * ExactInt(2 * idx.l2 + 1), ExactInt(2 * (idx.n + 1)));
  Rational insq(factorial_exact(idx.n + idx.l + 1) * factorial_exact(idx.n3 + idx.l3 + 1),
                factorial_exact(idx.n - idx.l) * factorial_exact(idx.n3 - idx.l3));
  Real p = p_route(idx, u, kin.w, ctx, route);
  return -pow_si(kin.kmag / kin.beta, idx.l2) * Real::of(fac, prec) * sqrt(Real::of(insq, prec)) * p;
}

FormFactor form_factor(const TransitionSpec& t, const Vec3& kvec, const PrecisionContext& ctx, PRoute route) {
  const mpfr_prec_t prec = ctx.bits;
  const long n = t.initial.n, l = t.initial.l, m = t.initial.m;
  const long np = t.final_state.n, lp = t.final_state.l, mp = t.final_state.m;
  const long m2 = m - mp;
  const long p = std::labs(l - lp);

  FormFactor out{Complex(prec), kinematics_of(t.channel, kvec), {}};
  Real pre = sqrt(t.channel.alpha * (n + 1) / (t.channel.beta * (np + 1)));

  for (long l2 = p; l2 <= l + lp; l2 += 2) {
    Real c1 = clebsch3d(l, 0, l2, 0, lp, 0, ctx);
    Real c2 = clebsch3d(l2, m2, lp, mp, l, m, ctx);
    if (c1.is_zero() || c2.is_zero()) continue;
    Complex ylm = racah_harmonic(l2, m2, out.kin.theta, out.kin.phi);
    Real b = coeff_B(PIndex{n, l, np, lp, l2}, out.kin, t.channel.u, ctx, route);
    Real coeff = pre * c1 * c2 * b;
    if (((l2 + p) / 2) % 2) coeff = -coeff;  // phi(l2)
    Complex term = ylm * coeff;
    out.value = out.value + term;
    out.l2_terms.emplace_back(l2, std::move(term));
  }
  return out;
}

Real radial_matrix_element(const TransitionSpec& t, long l2, const Real& kmag, const PrecisionContext& ctx,
                           PRoute route) {
  const mpfr_prec_t prec = ctx.bits;
  const long n = t.initial.n, l = t.initial.l;
  const long np = t.final_state.n, lp = t.final_state.l;
  PIndex idx{n, l, np, lp, l2};
  idx.require();
  Kinematics kin = kinematics_polar(t.channel, kmag);
  Real p = p_route(idx, t.channel.u, kin.w, ctx, route);
  ExactInt num = factorial_exact(l2) * factorial_exact(2 * l + 1) * factorial_exact(2 * lp + 1);
  Real val = Real::of(num, prec) / (pow_si(2 * t.channel.alpha, l + 1) * pow_si(2 * t.channel.beta, lp + 2)) *
             pow_si(kmag / t.channel.beta, l2) * p;
  if ((l + l2 + lp) % 2 == 0) val = -val;  // (-1)^{l+l2+l'+1}
  return val;
}

Real form_factor_1s(long n3, long l3, const Channel& ch, const Real& kmag, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  if (l3 < 0 || n3 < l3) throw IndexViolation("form_factor_1s: need 0 <= l3 <= n3");
  Kinematics kin = kinematics_polar(ch, kmag);
  Real p = pcoeff::p_1s(n3, l3, ch.u, kin.w, ctx).value;
  Rational half_fac(factorial_exact(l3), ExactInt(2));
  Rational insq(factorial_exact(n3 + l3 + 1), ExactInt(n3 + 1) * factorial_exact(n3 - l3));
  return -Real::of(half_fac, prec) * pow_si(kmag / ch.beta, l3) * sqrt(ch.alpha / ch.beta * Real::of(insq, prec)) *
         p;
}

namespace {

void coeff_D_check(long n, long n2, long n3, long l, long l3, long l2, const Channel& ch, const Real& kmag) {
  if (n < l || n2 < l2 || n3 < l3 || l < 0 || l2 < 0 || l3 < 0 || n2 - n3 + l < 0)
    throw IndexViolation("coeff_D: need n >= l, n2 >= l2, n3 >= l3, n2 - n3 + l >= 0");
  Real d = ch.alpha - ch.beta;
  if (!(ch.alpha < ch.beta) || !(d * d + kmag * kmag < 2 * ch.beta))
    throw ConvergenceRegionViolated("coeff_D: requires |alpha| < |beta| and (alpha-beta)^2 + k^2 < 2 beta");
}

Real coeff_D_prefactor(long n, long n2, long n3, long l, long l3, long l2, const Channel& ch,
                       const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Rational insq(factorial_exact(n + l + 1) * factorial_exact(n - l) * ExactInt(2 * l2 + 1),
                factorial_exact(n3 + l3 + 1) * factorial_exact(n3 - l3) * factorial_exact(n2 + l2 + 1) *
                    factorial_exact(n2 - l2));
  Real d = pow_si(2 * ch.beta, -n2) * sqrt(Real::of(insq, prec));
  return (l2 % 2) ? -d : d;
}

}  // namespace

Real coeff_D(long n, long n2, long n3, long l, long l3, long l2, const Channel& ch, const Real& kmag,
             const PrecisionContext& ctx) {
  coeff_D_check(n, n2, n3, l, l3, l2, ch, kmag);
  const mpfr_prec_t prec = ctx.bits;
  Real u = ch.u;
  Real f = exactmath::hyp3f2_terminating(l - n, Real::of(n2 + l - l3 + 1, prec), Real::of(n2 + l + l3 + 2, prec),
                                         Real::of(n2 - n3 + l + 1, prec), Real::of(2 * l + 2, prec), -u);
  Rational fac(factorial_exact(n2 + l + l3 + 1) * factorial_exact(n2 + l - l3),
               factorial_exact(n2 - n3 + l) * factorial_exact(n - l) * factorial_exact(2 * l + 1));
  return coeff_D_prefactor(n, n2, n3, l, l3, l2, ch, ctx) * Real::of(fac, prec) * pow_si(u, l) * f;
}

Real coeff_D_sum(long n, long n2, long n3, long l, long l3, long l2, const Channel& ch, const Real& kmag,
                 const PrecisionContext& ctx) {
  coeff_D_check(n, n2, n3, l, l3, l2, ch, kmag);
  const mpfr_prec_t prec = ctx.bits;
  Real sum = Real::of(0L, prec);
  for (long n1 = std::max({l, n3 - n2, l3 - n2}); n1 <= n; ++n1) {
    Rational term(factorial_exact(n1 + n2 + l3 + 1) * factorial_exact(n1 + n2 - l3),
                  factorial_exact(n - n1) * factorial_exact(n1 + n2 - n3) * factorial_exact(n1 + l + 1) *
                      factorial_exact(n1 - l));
    sum += Real::of(term, prec) * pow_si(ch.u, n1);
  }
  return coeff_D_prefactor(n, n2, n3, l, l3, l2, ch, ctx) * sum;
}

GosTable gos_scan(const TransitionSpec& t, const std::vector<Real>& lnk_grid, const PrecisionContext& ctx,
                  PRoute route) {
  const mpfr_prec_t prec = ctx.bits;
  const long l = t.initial.l, lp = t.final_state.l;
  GosTable table;
  for (long l2 = std::labs(l - lp); l2 <= l + lp; l2 += 2) table.l2_values.push_back(l2);
  table.rows.reserve(lnk_grid.size());
  Real zero = Real::of(0L, prec);

  for (const Real& lnk : lnk_grid) {
    GosRow row{lnk, exp(lnk), Real::of(0L, prec),
               std::vector<Real>(table.l2_values.size(), Real::of(0L, prec))};
    for (long mp = -lp; mp <= lp; ++mp) {
      TransitionSpec tm = t;
      tm.final_state.m = mp;
      FormFactor f = form_factor(tm, Vec3(zero, zero, row.k), ctx, route);
      row.absF2 += f.value.abs2();
      for (const auto& [l2, partial] : f.l2_terms) {
        for (size_t i = 0; i < table.l2_values.size(); ++i)
          if (table.l2_values[i] == l2) row.l2_partials[i] += partial.abs2();
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace hydroform::formfactor
