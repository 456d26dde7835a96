#include "hydroform/special.hpp"

namespace hydroform::exactmath {

Real gegenbauer(long lambda, long q, const Real& x) {
  const mpfr_prec_t prec = x.prec();
  if (q < 0) return Real::of(0L, prec);
  if (q == 0) return Real::of(1L, prec);
  Real y0 = Real::of(1L, prec);
  Real y1 = 2 * lambda * x;
  for (long k = 2; k <= q; ++k) {
    Real yk = (2 * (k + lambda - 1) * x * y1 - (k + 2 * lambda - 2) * y0) / k;
    y0 = std::move(y1);
    y1 = std::move(yk);
  }
  return y1;
}

Real gegenbauer_scaled(long lambda, long q, const Real& b, const Real& s2) {
  const mpfr_prec_t prec = b.prec();
  if (q < 0) return Real::of(0L, prec);
  if (q == 0) return Real::of(1L, prec);
  Real y0 = Real::of(1L, prec);
  Real y1 = 2 * lambda * b;
  for (long k = 2; k <= q; ++k) {
    Real yk = (2 * (k + lambda - 1) * b * y1 - (k + 2 * lambda - 2) * s2 * y0) / k;
    y0 = std::move(y1);
    y1 = std::move(yk);
  }
  return y1;
}

std::vector<Real> gegenbauer_row(long lambda, long qmax, const Real& x) {
  const mpfr_prec_t prec = x.prec();
  std::vector<Real> row;
  row.reserve(static_cast<size_t>(qmax + 1));
  row.push_back(Real::of(1L, prec));
  if (qmax == 0) return row;
  row.push_back(2 * lambda * x);
  for (long k = 2; k <= qmax; ++k)
    row.push_back((2 * (k + lambda - 1) * x * row[k - 1] - (k + 2 * lambda - 2) * row[k - 2]) / k);
  return row;
}

namespace {

bool hits_zero_before(const Real& c, long nterms) {
  // does c + k == 0 for some 0 <= k < nterms?
  if (c > 0L) return false;
  Real k = -c;
  return mpfr_integer_p(k.raw()) != 0 && k < Real::of(nterms, c.prec());
}

}  // namespace

Real hyp2f1_terminating(long minus_n, const Real& b, const Real& c, const Real& z) {
  if (minus_n > 0) throw DegenerateDenominator("hyp2f1_terminating: first parameter must be a nonpositive integer");
  const long N = -minus_n;
  const mpfr_prec_t prec = z.prec() > c.prec() ? z.prec() : c.prec();
  if (hits_zero_before(c, N)) throw DegenerateDenominator("hyp2f1_terminating: denominator parameter hits zero");
  Real sum = Real::of(1L, prec);
  Real term = Real::of(1L, prec);
  for (long k = 0; k < N; ++k) {
    term *= (Real::of(minus_n + k, prec) * (b + k) * z) / ((c + k) * (k + 1));
    sum += term;
  }
  return sum;
}

Real hyp3f2_terminating(long minus_n, const Real& a2, const Real& a3, const Real& b1, const Real& b2,
                        const Real& z) {
  if (minus_n > 0) throw DegenerateDenominator("hyp3f2_terminating: first parameter must be a nonpositive integer");
  const long N = -minus_n;
  const mpfr_prec_t prec = z.prec();
  if (hits_zero_before(b1, N) || hits_zero_before(b2, N))
    throw DegenerateDenominator("hyp3f2_terminating: denominator parameter hits zero");
  Real sum = Real::of(1L, prec);
  Real term = Real::of(1L, prec);
  for (long k = 0; k < N; ++k) {
    term *= (Real::of(minus_n + k, prec) * (a2 + k) * (a3 + k) * z) / ((b1 + k) * (b2 + k) * (k + 1));
    sum += term;
    if (term.is_zero()) break;  // an upper parameter terminated the series early
  }
  return sum;
}

Real kummer_bound(long m, const Real& c, const Real& x) {
  const mpfr_prec_t prec = x.prec() > c.prec() ? x.prec() : c.prec();
  if (hits_zero_before(c, m)) throw DegenerateDenominator("kummer_bound: denominator parameter hits zero");
  Real sum = Real::of(1L, prec);
  Real term = Real::of(1L, prec);
  for (long k = 0; k < m; ++k) {
    term *= (Real::of(k - m, prec) * x) / ((c + k) * (k + 1));
    sum += term;
  }
  return sum;
}

Real spherical_bessel(long l, const Real& x) {
  const mpfr_prec_t prec = x.prec();
  if (x.is_zero()) return Real::of(l == 0 ? 1L : 0L, prec);

  if (x < Real::of(l + 2, prec)) {
    // ascending series: j_l = x^l/(2l+1)!! * sum_j (-x^2/2)^j / (j! (2l+3)(2l+5)...(2l+2j+1))
    Real x2h = -(x * x) / 2;
    Real term = Real::of(1L, prec);
    Real sum = term;
    Real eps = pow2(-static_cast<long>(prec) - 8, prec);
    for (long j = 1; j < 10000; ++j) {
      term *= x2h / (Real::of(j, prec) * (2 * l + 2 * j + 1));
      sum += term;
      if (abs(term) < eps * abs(sum)) break;
    }
    return pow_si(x, l) / Real::of(double_factorial_exact(2 * l + 1), prec) * sum;
  }

  // oscillatory regime (x > l): forward recurrence from j_0, j_1
  Real s(prec), c(prec);
  sin_cos(s, c, x);
  Real j0 = s / x;
  if (l == 0) return j0;
  Real j1 = s / (x * x) - c / x;
  for (long k = 1; k < l; ++k) {
    Real jn = Real::of(2 * k + 1, prec) / x * j1 - j0;
    j0 = std::move(j1);
    j1 = std::move(jn);
  }
  return j1;
}

}  // namespace hydroform::exactmath
