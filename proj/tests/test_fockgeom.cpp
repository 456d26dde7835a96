#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hydroform/fockgeom.hpp"

using namespace hydroform;
using namespace hydroform::fockgeom;

namespace {

const PrecisionContext ctx;

Real rl(double d) { return Real::of(d, ctx.bits); }

bool close(const Real& a, const Real& b, double tol = 1e-32) {
  Real scale = max(max(abs(a), abs(b)), Real::of(1L, ctx.bits));
  return (abs(a - b) / scale).to_double() <= tol;
}

Vec3 v3(double x, double y, double z) { return Vec3(rl(x), rl(y), rl(z)); }

}  // namespace

TEST_CASE("stereographic projection y") {
  Real beta = rl(0.7);
  UnitVec4 pole = project_y(v3(0, 0, 0), beta);
  CHECK(pole.v1.is_zero());
  CHECK(pole.v2.is_zero());
  CHECK(pole.v3.is_zero());
  CHECK(pole.v0 == Real::of(1L, ctx.bits));

  // |p| = beta lands on the equator
  UnitVec4 eq = project_y(v3(0.7, 0, 0), beta);
  CHECK(abs(eq.v0).to_double() < 1e-36);

  // large momentum approaches the south pole
  UnitVec4 south = project_y(v3(0, 1e18, 0), beta);
  CHECK(abs(south.v0 + 1).to_double() < 1e-30);
}

TEST_CASE("projection x reduces to y at k=0 and maps p=k to the pole") {
  Real alpha = rl(1.3);
  Vec3 p = v3(0.4, -0.2, 0.9);
  UnitVec4 a = project_x(p, v3(0, 0, 0), alpha);
  UnitVec4 b = project_y(p, alpha);
  CHECK(close(a.v1, b.v1));
  CHECK(close(a.v0, b.v0));
  UnitVec4 c = project_x(p, p, alpha);
  CHECK(c.v0 == Real::of(1L, ctx.bits));
  UnitVec4 d = project_x(v3(1.3 + 0.4, -0.2, 0.9), v3(0.4, -0.2, 0.9), alpha);
  CHECK(abs(d.v0).to_double() < 1e-36);
}

TEST_CASE("projection properties: unit norm and compact form") {
  std::mt19937_64 rng(4242);
  auto unit = [&]() { return static_cast<double>(rng() >> 11) * 0x1p-53; };
  Real bound = rel_tolerance(ctx, 0.5);
  for (int it = 0; it < 10000; ++it) {
    Vec3 p = v3(20 * unit() - 10, 20 * unit() - 10, 20 * unit() - 10);
    Real beta = rl(0.05 + 3 * unit());
    UnitVec4 y = project_y(p, beta);
    CHECK(abs(y.norm2() - 1) < bound);
    if (it % 100 == 0) {
      // y = -e + 2 beta P/|P|^2 with P = (p, beta)
      Real p4 = p.norm2() + beta * beta;
      CHECK(close((2 * beta / p4) * p.x, y.v1));
      CHECK(close((2 * beta / p4) * p.y, y.v2));
      CHECK(close((2 * beta / p4) * p.z, y.v3));
      CHECK(close((2 * beta / p4) * beta - 1, y.v0));
    }
  }
}

TEST_CASE("kinematics derived scalars") {
  auto ch = Channel::make(rl(1.0), rl(1.0));
  Kinematics kin = kinematics_of(ch, v3(0, 0, 0));
  CHECK(kin.theta0_degenerate);
  CHECK(kin.cos_theta0 == Real::of(1L, ctx.bits));
  CHECK(kin.sin_theta0.is_zero());
  CHECK(kin.v.is_zero());
  CHECK(kin.w == Real::of(1L, ctx.bits));
  CHECK(ch.u == Real::of(1L, ctx.bits));

  // k = 0: w = (u+1)/2 for any channel
  auto ch2 = Channel::make(rl(0.8), rl(1.7));
  Kinematics k2 = kinematics_of(ch2, v3(0, 0, 0));
  CHECK(close(k2.w, (ch2.u + 1) / 2));
  CHECK(!k2.theta0_degenerate);
  CHECK(k2.cos_theta0 == Real::of(1L, ctx.bits));  // beta > alpha

  // alpha = beta with k > 0: cos(theta0) = 0
  Kinematics k3 = kinematics_of(ch, v3(0, 0, 0.9));
  CHECK(k3.cos_theta0.is_zero());
  CHECK(close(k3.sin_theta0, rl(1.0)));
  // w^2 = 1 - 2 v cos(theta0) + v^2
  CHECK(close(k3.w * k3.w, 1 - 2 * k3.v * k3.cos_theta0 + k3.v * k3.v));
  CHECK(close(k3.theta, rl(0.0)));

  // general channel invariants
  Kinematics k4 = kinematics_of(ch2, v3(0.3, -0.4, 1.2));
  CHECK(close(k4.cos_theta0 * k4.cos_theta0 + k4.sin_theta0 * k4.sin_theta0, rl(1.0)));
  CHECK(close(k4.w * k4.w, 1 - 2 * k4.v * k4.cos_theta0 + k4.v * k4.v));
  CHECK(close(k4.x_geg, (k4.w * k4.w - (ch2.u + 1) / 2) / (k4.v * k4.w)));
}

TEST_CASE("channel validation") {
  CHECK_THROWS_AS(Channel::make(rl(0.0), rl(1.0)), BadQuantumNumbers);
  CHECK_THROWS_AS(Channel::make(rl(1.0), rl(-2.0)), BadQuantumNumbers);
  CHECK_THROWS_AS(Channel::hydrogen(rl(1.0), 0, 3), BadQuantumNumbers);
  auto ch = Channel::hydrogen(rl(1.0), 1, 5);
  CHECK(close(ch.alpha, rl(1.0)));
  CHECK(close(ch.beta, rl(0.2)));
  CHECK(close(ch.u, rl(5.0)));
}

TEST_CASE("hsh values") {
  UnitVec4 y(rl(0.3), rl(-0.4), rl(0.5), sqrt(rl(0.5)));
  CHECK(close(hsh_evaluate(0, 0, 0, y).re, rl(1.0)));
  CHECK(hsh_evaluate(0, 0, 0, y).im.is_zero());
  // C_{100} = sqrt(2) y0
  CHECK(close(hsh_evaluate(1, 0, 0, y).re, sqrt(rl(2.0)) * y.v0));
  // at the pole: sqrt(n+1) delta_{l0} delta_{m0}
  UnitVec4 pole(rl(0.0), rl(0.0), rl(0.0), rl(1.0));
  for (long n = 0; n <= 5; ++n) {
    CHECK(close(hsh_evaluate(n, 0, 0, pole).re, sqrt(rl(static_cast<double>(n + 1)))));
    for (long l = 1; l <= n; ++l) CHECK(hsh_evaluate(n, l, 0, pole).re.is_zero());
  }
  // frozen references (40-digit recomputation of the defining formula)
  Complex c321 = hsh_evaluate(3, 2, 1, y);
  CHECK(close(c321.re, Real::parse("-0.5196152422706631880582339024517617100828", ctx.bits), 1e-37));
  CHECK(close(c321.im, Real::parse("0.6928203230275509174109785366023489467771", ctx.bits), 1e-37));
  CHECK(close(hsh_evaluate(4, 0, 0, y).re, Real::parse("-0.4472135954999579392818347337462552470881", ctx.bits),
              1e-37));
  CHECK_THROWS_AS(hsh_evaluate(2, 3, 0, y), BadQuantumNumbers);
  CHECK_THROWS_AS(hsh_evaluate(2, 1, 2, y), BadQuantumNumbers);
}

TEST_CASE("hsh normalization relation") {
  UnitVec4 y(rl(0.3), rl(-0.4), rl(0.5), sqrt(rl(0.5)));
  Real pi = Real::pi(ctx.bits);
  // Y_{000} = 1/sqrt(2 pi^2)
  CHECK(close(hsh_normalized(0, 0, 0, y).re, 1L / sqrt(2 * pi * pi)));
  // ratio at (n,l) = (2,1): Y/C = -sqrt(3/(2 pi^2))
  Complex cv = hsh_evaluate(2, 1, 1, y);
  Complex yv = hsh_normalized(2, 1, 1, y);
  CHECK(close(yv.re, -sqrt(3L / (2 * pi * pi)) * cv.re));
  CHECK(close(yv.im, -sqrt(3L / (2 * pi * pi)) * cv.im));
}

TEST_CASE("solid hsh is a harmonic polynomial of the 4 components") {
  // finite-difference 4D Laplacian of the solid harmonic vanishes to O(h^2);
  // compare against the same stencil applied to a non-harmonic control
  Vec4 base(rl(0.4), rl(-0.3), rl(0.7), rl(0.6));
  Real h = rl(1e-3);
  for (auto [n, l, m] : std::vector<std::array<long, 3>>{{2, 1, 0}, {3, 2, 1}, {4, 2, 2}}) {
    Complex lap(ctx.bits);
    Real control(ctx.bits);
    for (int axis = 0; axis < 4; ++axis) {
      Vec4 up = base, dn = base;
      (axis == 0 ? up.v1 : axis == 1 ? up.v2 : axis == 2 ? up.v3 : up.v0) += h;
      (axis == 0 ? dn.v1 : axis == 1 ? dn.v2 : axis == 2 ? dn.v3 : dn.v0) -= h;
      Complex second =
          hsh_solid(n, l, m, up) - hsh_solid(n, l, m, base) - hsh_solid(n, l, m, base) + hsh_solid(n, l, m, dn);
      lap = lap + second;
      control = max(control, second.abs());
    }
    CHECK((lap.abs() / (control + h * h)).to_double() < 1e-20);  // exact cancellation up to rounding
  }
  // solid value reduces to the unit evaluation on the sphere
  UnitVec4 y(rl(0.3), rl(-0.4), rl(0.5), sqrt(rl(0.5)));
  CHECK(close(hsh_solid(3, 2, 1, y).re, hsh_evaluate(3, 2, 1, y).re));
}

TEST_CASE("surface jacobian") {
  CHECK(close(surface_jacobian(v3(0, 0, 0), rl(2.0)), rl(1.0)));  // 8/beta^3 at beta = 2
  Real beta = rl(0.7);
  CHECK(close(surface_jacobian(v3(0, 0, 0), beta), 8L / pow_si(beta, 3)));
  CHECK(close(surface_jacobian(v3(0.7, 0, 0), beta), 1L / pow_si(beta, 3)));
  CHECK(close(surface_jacobian(v3(0, 1, 0), rl(1.0)), rl(1.0)));
}
