#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hydroform/angular.hpp"
#include "hydroform/special.hpp"

using namespace hydroform;
using namespace hydroform::exactmath;

namespace {

const PrecisionContext ctx;

Real rl(double d) { return Real::of(d, ctx.bits); }
Real rl(long n) { return Real::of(n, ctx.bits); }

bool close(const Real& a, const Real& b, double tol = 1e-30) {
  Real scale = max(max(abs(a), abs(b)), rl(1L));
  return (abs(a - b) / scale).to_double() <= tol;
}

bool close(const Complex& a, const Complex& b, double tol = 1e-30) {
  return close(a.re, b.re, tol) && close(a.im, b.im, tol);
}

}  // namespace

TEST_CASE("factorials and binomials") {
  CHECK(factorial_exact(0).str() == "1");
  CHECK(factorial_exact(1).str() == "1");
  CHECK(factorial_exact(10).str() == "3628800");
  CHECK(factorial_exact(30).str() == "265252859812191058636308480000000");
  CHECK(binomial_exact(5, 0).str() == "1");
  CHECK(binomial_exact(5, 7).str() == "0");
  CHECK(binomial_exact(5, -2).str() == "0");
  CHECK(binomial_exact(6, 3).str() == "20");
  // Pascal recurrence spot sweep
  for (long n = 1; n <= 24; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(binomial_exact(n, k) == binomial_exact(n - 1, k - 1) + binomial_exact(n - 1, k));
}

TEST_CASE("gegenbauer closed forms and recurrence residual") {
  CHECK(close(gegenbauer(1, 0, rl(0.77)), rl(1L)));
  CHECK(close(gegenbauer(2, 1, rl(0.3)), rl(1.2)));
  CHECK(close(gegenbauer(1, 2, rl(0.5)), rl(0L)));  // 4x^2 - 1 at x = 1/2
  CHECK(gegenbauer(3, -1, rl(0.4)).is_zero());
  // C^lambda_q(1) = binom(q + 2 lambda - 1, q)
  for (long lam = 1; lam <= 4; ++lam)
    for (long q = 0; q <= 9; ++q)
      CHECK(close(gegenbauer(lam, q, rl(1L)), Real::of(binomial_exact(q + 2 * lam - 1, q), ctx.bits)));

  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> xd(-2.0, 2.0);
  Real bound = rel_tolerance(ctx, 0.25);
  for (int it = 0; it < 300; ++it) {
    long lam = 1 + static_cast<long>(rng() % 6);
    long q = 2 + static_cast<long>(rng() % 39);
    Real x = rl(xd(rng));
    Real lhs = q * gegenbauer(lam, q, x);
    Real rhs = 2 * (q + lam - 1) * x * gegenbauer(lam, q - 1, x) - (q + 2 * lam - 2) * gegenbauer(lam, q - 2, x);
    Real scale = max(max(abs(lhs), abs(rhs)), rl(1L));
    CHECK(abs(lhs - rhs) / scale < bound);
  }
}

TEST_CASE("gegenbauer_scaled matches plain gegenbauer") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> xd(0.2, 2.5);
  for (int it = 0; it < 50; ++it) {
    Real s = rl(xd(rng));
    Real x = rl(xd(rng) - 1.2);
    long lam = 1 + static_cast<long>(rng() % 4);
    long q = static_cast<long>(rng() % 12);
    Real want = pow_si(s, q) * gegenbauer(lam, q, x / s);
    CHECK(close(gegenbauer_scaled(lam, q, x, s * s), want, 1e-28));
  }
  // s2 = 0 degenerates to the leading monomial, no division anywhere
  CHECK(close(gegenbauer_scaled(2, 3, rl(0.5), rl(0L)), rl(4 * 5 * 0.125 / 3 * 2)));
}

TEST_CASE("terminating 2F1") {
  CHECK(close(hyp2f1_terminating(0, rl(3.7), rl(1.1), rl(0.9)), rl(1L)));
  CHECK(close(hyp2f1_terminating(-1, rl(1L), rl(2L), rl(0.5)), rl(0.75)));
  CHECK(close(hyp2f1_terminating(-2, rl(1L), rl(2L), rl(1L)), rl(1.0 / 3.0)));
  // reference value: exact rational sum for (-3, 3/2; 5/2; 2/5)
  // 1 - 3*(3/2)/(5/2)*(2/5) + 3*(3/2)(5/2)/((5/2)(7/2))*(4/25)/1 - (3/2)(5/2)(7/2)/((5/2)(7/2)(9/2))*(8/125)
  Real want = rl(1L) - rl(18L) / 25 + Real::parse("0.18", ctx.bits) * rl(6L) / 7 / rl(1L) -
              rl(8L) / 125 / 3;
  CHECK(close(hyp2f1_terminating(-3, rl(1.5), rl(2.5), rl(0.4)),
              Real::parse("0.41580952380952380952380952380952380952", ctx.bits), 1e-35));
  CHECK_THROWS_AS(hyp2f1_terminating(-4, rl(1L), rl(-2L), rl(0.3)), DegenerateDenominator);
  (void)want;
}

TEST_CASE("terminating 3F2") {
  CHECK(close(hyp3f2_terminating(0, rl(1L), rl(1L), rl(2L), rl(2L), rl(0.7)), rl(1L)));
  CHECK(close(hyp3f2_terminating(-1, rl(1L), rl(1L), rl(2L), rl(2L), rl(1L)), rl(0.75)));
  CHECK_THROWS_AS(hyp3f2_terminating(-3, rl(1L), rl(1L), rl(-1L), rl(2L), rl(0.5)), DegenerateDenominator);
}

TEST_CASE("kummer polynomial") {
  CHECK(close(kummer_bound(0, rl(3.3), rl(2.2)), rl(1L)));
  CHECK(close(kummer_bound(1, rl(2L), rl(1L)), rl(0.5)));
  CHECK(close(kummer_bound(2, rl(4L), rl(2L)), rl(0.2)));
}

TEST_CASE("spherical bessel values and recurrence identity") {
  CHECK(close(spherical_bessel(0, Real::parse("1e-25", ctx.bits)), rl(1L), 1e-30));
  CHECK(spherical_bessel(1, rl(0L)).is_zero());
  CHECK(spherical_bessel(0, rl(0L)) == rl(1L));
  CHECK(abs(spherical_bessel(0, Real::pi(ctx.bits))).to_double() < 1e-37);
  // reference j_5(7.3), 40 digits (mpmath)
  CHECK(close(spherical_bessel(5, rl(7.3)),
              Real::parse("0.1358853565986772046211899474380826315022", ctx.bits), 1e-35));
  // j_2(0.5), series regime
  CHECK(close(spherical_bessel(2, rl(0.5)),
              Real::parse("0.01637368831550799952243599691214048770123", ctx.bits), 1e-35));

  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> xd(0.1, 50.0);
  Real bound = rel_tolerance(ctx, 0.25);
  for (int it = 0; it < 200; ++it) {
    long l = 1 + static_cast<long>(rng() % 12);
    Real x = rl(xd(rng));
    Real lhs = spherical_bessel(l - 1, x) + spherical_bessel(l + 1, x);
    Real rhs = Real::of(2 * l + 1, ctx.bits) / x * spherical_bessel(l, x);
    Real scale = max(max(abs(lhs), abs(rhs)), Real::parse("1e-10", ctx.bits));
    CHECK(abs(lhs - rhs) / scale < bound);
  }
}

TEST_CASE("clebsch-gordan values and orthogonality") {
  CHECK(clebsch3d(0, 0, 0, 0, 0, 0, ctx) == rl(1L));
  CHECK(clebsch3d(1, 0, 0, 0, 1, 0, ctx) == rl(1L));
  // parity zero whenever l + l2 + l' odd at zero projections
  for (long l1 = 0; l1 <= 4; ++l1)
    for (long l2 = 0; l2 <= 4; ++l2)
      for (long l = std::abs(l1 - l2); l <= l1 + l2; ++l)
        if ((l1 + l2 + l) % 2) CHECK(clebsch3d(l1, 0, l2, 0, l, 0, ctx).is_zero());
  // reference: C^{2 1}_{1 0, 1 1} = 1/sqrt(2), C^{1 0}_{1 1, 1 -1} = 1/sqrt(2),
  // C^{0 0}_{1 1, 1 -1} = 1/sqrt(3), C^{2 0}_{1 0, 1 0} = sqrt(2/3)
  CHECK(close(clebsch3d(1, 0, 1, 1, 2, 1, ctx), sqrt(rl(1L) / 2), 1e-35));
  CHECK(close(clebsch3d(1, 1, 1, -1, 1, 0, ctx), sqrt(rl(1L) / 2), 1e-35));
  CHECK(close(clebsch3d(1, 1, 1, -1, 0, 0, ctx), sqrt(rl(1L) / 3), 1e-35));
  CHECK(close(clebsch3d(1, 0, 1, 0, 2, 0, ctx), sqrt(rl(2L) / 3), 1e-35));
  CHECK(clebsch3d(1, 0, 1, 0, 1, 0, ctx).is_zero());
  CHECK(clebsch3d(2, 2, 1, -1, 3, 0, ctx).is_zero());  // projection rule

  // orthogonality: sum_{m1,m2} C^{lm} C^{l'm'} = delta
  for (long l1 = 0; l1 <= 4; ++l1)
    for (long l2 = 0; l2 <= 4 - l1; ++l2)
      for (long l = std::abs(l1 - l2); l <= l1 + l2; ++l)
        for (long lq = std::abs(l1 - l2); lq <= l1 + l2; ++lq) {
          Real sum = rl(0L);
          long m = 0, mq = 0;
          for (long m1 = -l1; m1 <= l1; ++m1)
            for (long m2 = -l2; m2 <= l2; ++m2) {
              if (m1 + m2 != m || m1 + m2 != mq) continue;
              sum += clebsch3d(l1, m1, l2, m2, l, m, ctx) * clebsch3d(l1, m1, l2, m2, lq, mq, ctx);
            }
          CHECK(close(sum, rl(l == lq ? 1L : 0L), 1e-36));
        }
}

TEST_CASE("racah harmonics") {
  Real th = rl(0.83), ph = rl(-1.7);
  CHECK(close(racah_harmonic(0, 0, th, ph), Complex::of(rl(1L))));
  CHECK(close(racah_harmonic(1, 0, th, ph), Complex::of(cos(th)), 1e-35));
  Real pi2 = Real::pi(ctx.bits) / 2;
  CHECK(close(racah_harmonic(1, 1, pi2, rl(0L)), Complex::of(-sqrt(rl(1L) / 2)), 1e-35));
  // conjugation symmetry C_{l,-m} = (-1)^m conj(C_{lm})
  for (long l = 0; l <= 5; ++l)
    for (long m = 0; m <= l; ++m) {
      Complex a = racah_harmonic(l, -m, th, ph);
      Complex b = racah_harmonic(l, m, th, ph).conj();
      if (m % 2) b = -b;
      CHECK(close(a, b, 1e-34));
    }
  // addition-theorem style check against Legendre: C_{l0} = P_l(cos theta)
  // P_3(x) = (5x^3-3x)/2
  Real x = cos(th);
  CHECK(close(racah_harmonic(3, 0, th, ph).re, (5 * x * x * x - 3 * x) / 2, 1e-34));
}
