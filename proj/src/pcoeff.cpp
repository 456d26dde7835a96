#include "hydroform/pcoeff.hpp"

#include <algorithm>

#include "hydroform/special.hpp"

namespace hydroform::pcoeff {

using exactmath::binomial_exact;
using exactmath::factorial_exact;
using exactmath::gegenbauer_row;
using exactmath::gegenbauer_scaled;
using exactmath::hyp2f1_terminating;

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::series: return "series";
    case Backend::gegenbauer: return "gegenbauer";
    case Backend::closed_1s: return "closed_1s";
    case Backend::closed_dipole: return "closed_dipole";
  }
  return "?";
}

BiSeries::BiSeries(long tmax, long taumax, mpfr_prec_t prec)
    : tmax_(tmax), taumax_(taumax),
      c_(static_cast<size_t>(tmax + 1) * static_cast<size_t>(taumax + 1), Real::of(0L, prec)) {}

BiSeries BiSeries::add(const BiSeries& o) const {
  BiSeries r(std::min(tmax_, o.tmax_), std::min(taumax_, o.taumax_), c_[0].prec());
  for (long i = 0; i <= r.tmax_; ++i)
    for (long j = 0; j <= r.taumax_; ++j) r.at(i, j) = coeff(i, j) + o.coeff(i, j);
  return r;
}

BiSeries BiSeries::mul(const BiSeries& o, long tcap, long taucap) const {
  BiSeries r(tcap, taucap, c_[0].prec());
  for (long i = 0; i <= std::min(tmax_, tcap); ++i)
    for (long j = 0; j <= std::min(taumax_, taucap); ++j) {
      if (coeff(i, j).is_zero()) continue;
      for (long i2 = 0; i2 + i <= tcap && i2 <= o.tmax_; ++i2)
        for (long j2 = 0; j2 + j <= taucap && j2 <= o.taumax_; ++j2)
          r.at(i + i2, j + j2) += coeff(i, j) * o.coeff(i2, j2);
    }
  return r;
}

BiSeries BiSeries::derivative_t(long k) const {
  BiSeries r(std::max(tmax_ - k, 0L), taumax_, c_[0].prec());
  const mpfr_prec_t prec = c_[0].prec();
  for (long i = 0; i + k <= tmax_; ++i) {
    // (i+k)! / i!
    Real fall = Real::of(1L, prec);
    for (long j = i + 1; j <= i + k; ++j) fall *= j;
    for (long j = 0; j <= taumax_; ++j) r.at(i, j) = coeff(i + k, j) * fall;
  }
  return r;
}

BiSeries BiSeries::derivative_tau(long k) const {
  BiSeries r(tmax_, std::max(taumax_ - k, 0L), c_[0].prec());
  const mpfr_prec_t prec = c_[0].prec();
  for (long j = 0; j + k <= taumax_; ++j) {
    Real fall = Real::of(1L, prec);
    for (long i = j + 1; i <= j + k; ++i) fall *= i;
    for (long i = 0; i <= tmax_; ++i) r.at(i, j) = coeff(i, j + k) * fall;
  }
  return r;
}

BiSeries BiSeries::one_plus_t_pow(long e, long tcap, mpfr_prec_t prec) {
  BiSeries r(tcap, 0, prec);
  for (long i = 0; i <= std::min(e, tcap); ++i) r.at(i, 0) = Real::of(binomial_exact(e, i), prec);
  return r;
}

BiSeries BiSeries::shifted_tau_pow(const Real& c, long e, long taucap) {
  const mpfr_prec_t prec = c.prec();
  BiSeries r(0, taucap, prec);
  for (long j = 0; j <= std::min(e, taucap); ++j)
    r.at(0, j) = Real::of(binomial_exact(e, j), prec) * pow_si(c, e - j);
  return r;
}

BiSeries BiSeries::gegenbauer_kernel(long l2, const Real& u, const Real& w, long tcap, long taucap) {
  const mpfr_prec_t prec = w.prec();
  BiSeries r(tcap, taucap, prec);
  const long qtop = tcap + taucap;
  Real xi = -(u + 1) / (2 * w);
  std::vector<Real> geg = gegenbauer_row(l2 + 1, qtop, xi);
  Real winv = 1L / w;
  std::vector<Real> wpow(static_cast<size_t>(qtop + 1), Real::of(0L, prec));
  wpow[0] = pow_si(winv, 2 * l2 + 2);
  for (long q = 1; q <= qtop; ++q) wpow[q] = wpow[q - 1] * winv;
  for (long i = 0; i <= tcap; ++i)
    for (long j = 0; j <= taucap; ++j) {
      long q = i + j;
      r.at(i, j) = Real::of(binomial_exact(q, i), prec) * wpow[q] * geg[q];
    }
  return r;
}

PValue p_series(const PIndex& idx, const Real& u, const Real& w, const PrecisionContext& ctx) {
  idx.require();
  const mpfr_prec_t prec = ctx.bits;
  const long D = idx.inner_order();
  const long T = idx.n3 - idx.l3;
  const long Tau = idx.n - idx.l;

  BiSeries k = BiSeries::gegenbauer_kernel(idx.l2, u, w, T, Tau + D);
  k = k.derivative_tau(D);
  k = k.mul(BiSeries::one_plus_t_pow(idx.n3 + idx.l3 + 1, T, prec), T, Tau);
  k = k.derivative_t(T);
  k = k.mul(BiSeries::shifted_tau_pow(u, idx.n + idx.l + 1, Tau), 0, Tau);
  k = k.derivative_tau(Tau);

  Rational scale(ExactInt(1), factorial_exact(idx.n + idx.l + 1) * factorial_exact(idx.n3 + idx.l3 + 1));
  Real val = k.value_at_zero() * Real::of(scale, prec) * pow_si(u, -idx.l);
  return PValue{idx, u, w, std::move(val), Backend::series};
}

namespace {

Rational c_q_mterm(const PIndex& idx, long q, long m) {
  ExactInt num = binomial_exact(idx.n - idx.l, m) * binomial_exact(idx.n3 - idx.l3, q - m) *
                 factorial_exact(idx.inner_order() + q);
  ExactInt den = factorial_exact(2 * idx.l + 1 + m) * factorial_exact(2 * idx.l3 + q + 1 - m);
  return Rational(num, den);
}

}  // namespace

Real c_q(const PIndex& idx, long q, const Real& u, const PrecisionContext& ctx) {
  idx.require();
  if (q < 0 || q > idx.qmax()) throw IndexViolation("c_q: q outside [0, qmax]");
  const mpfr_prec_t prec = ctx.bits;
  const long mlo = std::max(0L, q - (idx.n3 - idx.l3));
  const long mhi = std::min(idx.n - idx.l, q);
  // Horner in u with exact rational coefficients
  Real acc = Real::of(0L, prec);
  for (long m = mhi; m >= mlo; --m) {
    acc *= u;
    acc += Real::of(c_q_mterm(idx, q, m), prec);
  }
  return acc * pow_si(u, mlo);
}

PValue p_gegenbauer(const PIndex& idx, const Real& u, const Real& w, const PrecisionContext& ctx) {
  idx.require();
  const mpfr_prec_t prec = ctx.bits;
  const long D = idx.inner_order();
  const long qmax = idx.qmax();
  Real xi = -(u + 1) / (2 * w);
  std::vector<Real> geg = gegenbauer_row(idx.l2 + 1, D + qmax, xi);
  Real winv = 1L / w;
  Real wq = Real::of(1L, prec);
  Real sum = Real::of(0L, prec);
  for (long q = 0; q <= qmax; ++q) {
    sum += wq * c_q(idx, q, u, ctx) * geg[D + q];
    wq *= winv;
  }
  Real val = pow_si(u, idx.l + 1) * pow_si(winv, idx.l + idx.l2 + idx.l3 + 3) * sum;
  return PValue{idx, u, w, std::move(val), Backend::gegenbauer};
}

PValue p_1s(long n3, long l3, const Real& u, const Real& w, const PrecisionContext& ctx) {
  PIndex idx{0, 0, n3, l3, l3};
  idx.require();
  const mpfr_prec_t prec = ctx.bits;
  // scaled so the v -> 0 corner stays finite: G_q = v^q C^{l+1}_q(x) with
  // x v = (w^2 - (u+1)/2)/w and v^2 = w^2 - u; also w^2 - v^2 = u.
  Real xv = (w * w - (u + 1) / 2) / w;
  Real v2 = w * w - u;
  Real g_hi = gegenbauer_scaled(l3 + 1, n3 - l3, xv, v2);
  Real g_lo = gegenbauer_scaled(l3 + 1, n3 - l3 - 1, xv, v2);
  Real bracket = -2 * (n3 + 1) * (w - xv) * g_hi + Real::of(n3 + l3 + 1, prec) * u * g_lo;
  Rational scale(factorial_exact(n3 - l3), factorial_exact(n3 + l3 + 1));
  Real val = Real::of(scale, prec) * u * pow_si(w, -(l3 + 3 + n3)) * bracket;
  return PValue{idx, u, w, std::move(val), Backend::closed_1s};
}

PValue p_dipole0(long n, long l, long n3, const Real& u, const PrecisionContext& ctx) {
  PIndex idx{n, l, n3, l, 0};
  idx.require();
  const mpfr_prec_t prec = ctx.bits;
  Real w = (u + 1) / 2;
  if (u == 1L) {
    // exact limit: diagonal from the Kronecker form, |n-n3| = 1 from the
    // leading asymptotics of the terminating 2F1, zero beyond.
    Real val = Real::of(0L, prec);
    if (n == n3) {
      Rational r(factorial_exact(n - l) * ExactInt(-2 * (n + 1)), factorial_exact(n + l + 1));
      val = Real::of(r, prec);
    } else if (n3 == n + 1 || n3 == n - 1) {
      long nm = std::min(n, n3);
      Rational r(factorial_exact(nm - l), factorial_exact(nm + l + 1));
      val = Real::of(r, prec);
    }
    return PValue{idx, u, w, std::move(val), Backend::closed_dipole};
  }
  Real one_m = 1 - u;
  Real z = -4 * u / (one_m * one_m);
  Real f = hyp2f1_terminating(l - n, Real::of(l - n3, prec), Real::of(2 * l + 2, prec), z);
  Real ratio = one_m / (1 + u);
  Real pre = 4 * Real::of(Rational(ExactInt((n3 % 2) ? -1 : 1), factorial_exact(2 * l + 1)), prec);
  Real val = pre * pow_si(z, l + 1) * pow_si(ratio, n + n3 + 1) * (Real::of(n3 + 1, prec) - (n + 1) * u) /
             pow_si(u + 1, 2) * f;
  return PValue{idx, u, w, std::move(val), Backend::closed_dipole};
}

Real dipole_f(int k, long n, long l, long n3, const Real& u, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Real lin = (n + 1) * u - Real::of(n3 + 2 - k, prec);
  if (lin.is_zero()) return Real::of(0L, prec);
  if (u == 1L) throw DegenerateU("dipole_f: u = 1");
  Real one_m = 1 - u;
  Real z = -4 * u / (one_m * one_m);
  Real f = hyp2f1_terminating(l - n, Real::of(l - 1 - n3 + k, prec), Real::of(2 * l + 2, prec), z);
  return pow_si(one_m / (1 + u), 2 - k) * lin / pow_si(u + 1, 2) * f;
}

PValue p_dipole1(long n, long l, long n3, const Real& u, const PrecisionContext& ctx) {
  if (l < 1) throw IndexViolation("p_dipole1: l >= 1 required");
  PIndex idx{n, l, n3, l - 1, 1};
  idx.require();
  if (u == 1L) throw DegenerateU("p_dipole1: closed form degenerates at u = 1");
  const mpfr_prec_t prec = ctx.bits;
  Real w = (u + 1) / 2;
  Real one_m = 1 - u;
  Real z = -4 * u / (one_m * one_m);
  Real bracket = Real::of((n3 + l + 1) * (n3 + l + 2), prec) * dipole_f(0, n, l, n3, u, ctx) +
                 Real::of(2 * (n3 + l + 1) * (n3 - l + 1), prec) * dipole_f(1, n, l, n3, u, ctx) +
                 Real::of((n3 - l + 1) * (n3 - l), prec) * dipole_f(2, n, l, n3, u, ctx);
  Real pre = 2 * Real::of(Rational(ExactInt((n3 % 2) ? -1 : 1), ExactInt(3) * factorial_exact(2 * l + 1)), prec);
  Real val = pre * pow_si(z, l + 1) * pow_si(one_m / (1 + u), n + n3) * bracket;
  return PValue{idx, u, w, std::move(val), Backend::closed_dipole};
}

SymmetryMap p_symmetry_map(const PIndex& idx, const Real& u, const Real& w) {
  idx.require();
  if (u.is_zero()) throw DegenerateU("p_symmetry_map: u = 0");
  return SymmetryMap{idx.swapped(), 1L / u, w / u, pow_si(u, -(idx.l2 + 1))};
}

PValue p_auto(const PIndex& idx, const Real& u, const Real& w, const PrecisionContext& ctx, int retries) {
  PrecisionContext c = ctx;
  for (int attempt = 0;; ++attempt) {
    Real uu = u, ww = w;
    if (c.bits != u.prec()) {
      uu = Real(c.bits);
      mpfr_set(uu.raw(), u.raw(), MPFR_RNDN);
      ww = Real(c.bits);
      mpfr_set(ww.raw(), w.raw(), MPFR_RNDN);
    }
    PValue a = p_series(idx, uu, ww, c);
    PValue b = p_gegenbauer(idx, uu, ww, c);
    Real scale = max(max(abs(a.value), abs(b.value)), Real::parse("1e-30", c.bits));
    if (abs(a.value - b.value) / scale <= rel_tolerance(c, 0.5) || attempt >= retries) return a;
    c = c.doubled();
  }
}

}  // namespace hydroform::pcoeff
