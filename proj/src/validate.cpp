#include "hydroform/validate.hpp"

#include <array>
#include <map>
#include <memory>
#include <random>

#include "hydroform/special.hpp"

namespace hydroform::validate {

using formfactor::BoundLabel;
using formfactor::TransitionSpec;
using pcoeff::PIndex;

std::vector<std::pair<Real, Real>> uw_samples(size_t count, unsigned long seed, const PrecisionContext& ctx) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1p-53; };
  std::vector<std::pair<Real, Real>> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    double u = 0.1 + 2.9 * unit();
    double w = 0.1 + 2.9 * unit();
    out.emplace_back(Real::of(u, ctx.bits), Real::of(w, ctx.bits));
  }
  return out;
}

std::vector<PIndex> admissible_indices(long nmax) {
  std::vector<PIndex> out;
  for (long n = 0; n <= nmax; ++n)
    for (long l = 0; l <= n; ++l)
      for (long n3 = 0; n3 <= nmax; ++n3)
        for (long l3 = 0; l3 <= n3; ++l3)
          for (long l2 = 0; l2 <= l + l3 + 1; ++l2) out.push_back(PIndex{n, l, n3, l3, l2});
  return out;
}

CheckResult suite_backends(long nmax, size_t pairs, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Real bound = rel_tolerance(ctx, 0.5);
  Real floor = Real::parse("1e-30", prec);
  Real worst = Real::of(0L, prec);
  long cases = 0;
  auto samples = uw_samples(pairs, 0x48594452u, ctx);
  for (const PIndex& idx : admissible_indices(nmax)) {
    for (const auto& [u, w] : samples) {
      Real a = pcoeff::p_series(idx, u, w, ctx).value;
      Real b = pcoeff::p_gegenbauer(idx, u, w, ctx).value;
      Real res = abs(a - b) / max(max(abs(a), abs(b)), floor);
      if (res > bound) {
        // the auto path doubles precision until the two routes agree
        Real c = pcoeff::p_auto(idx, u, w, ctx).value;
        res = abs(a - c) / max(max(abs(a), abs(c)), floor);
      }
      worst = max(worst, res);
      ++cases;
    }
  }
  return make_result("backend agreement p_series vs p_gegenbauer", worst, bound, cases);
}

CheckResult suite_symmetry(long nmax, size_t pairs, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Real bound = rel_tolerance(ctx, 0.5);
  Real floor = Real::parse("1e-30", prec);
  Real worst = Real::of(0L, prec);
  long cases = 0;
  auto samples = uw_samples(pairs, 0x53594d4du, ctx);
  for (const PIndex& idx : admissible_indices(nmax)) {
    for (const auto& [u, w] : samples) {
      Real lhs = pcoeff::p_series(idx, u, w, ctx).value;
      auto map = pcoeff::p_symmetry_map(idx, u, w);
      Real rhs = map.multiplier * pcoeff::p_series(map.swapped, map.u_swapped, map.w_swapped, ctx).value;
      Real res = abs(lhs - rhs) / max(max(abs(lhs), abs(rhs)), floor);
      worst = max(worst, res);
      ++cases;
    }
  }
  return make_result("index/argument symmetry of P", worst, bound, cases);
}

std::vector<CheckResult> suite_recurrences(long nmax, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Real bound = rel_tolerance(ctx, 0.5);
  const char* names[4] = {"recurrence in (n3, l3)", "recurrence in (n, l)", "recurrence in l2",
                          "recurrence at fixed angular indices"};
  Real worst[4] = {Real::of(0L, prec), Real::of(0L, prec), Real::of(0L, prec), Real::of(0L, prec)};
  long cases[4] = {0, 0, 0, 0};

  for (long n = 0; n <= nmax; ++n)
    for (long n3 = 0; n3 <= nmax; ++n3) {
      std::vector<Real> us = {Real::of(1L, prec) / 2, Real::of(1L, prec),
                              Real::of(n3 + 1, prec) / (n + 1), Real::of(2L, prec)};
      for (const Real& u : us) {
        std::vector<Real> ws = {Real::of(9L, prec) / 10, (u + 1) / 2, Real::of(3L, prec) / 2};
        for (const Real& w : ws) {
          // memoized series values shared by every relation at this (u, w)
          auto cache = std::make_shared<std::map<std::array<long, 5>, Real>>();
          recurrence::PProvider provider = [&, cache](const PIndex& idx) {
            std::array<long, 5> key{idx.n, idx.l, idx.n3, idx.l3, idx.l2};
            auto it = cache->find(key);
            if (it != cache->end()) return it->second;
            Real v = pcoeff::p_series(idx, u, w, ctx).value;
            cache->emplace(key, v);
            return v;
          };
          for (long l = 0; l <= n; ++l)
            for (long l3 = 0; l3 <= n3; ++l3)
              for (long l2 = 0; l2 <= l + l3 + 1; ++l2) {
                for (int rel = 0; rel < 4; ++rel) {
                  try {
                    Real r(prec);
                    switch (rel) {
                      case 0: r = recurrence::residual_rec1_first(n, l, n3, l3, l2, u, w, ctx, provider); break;
                      case 1: r = recurrence::residual_rec1_second(n, l, n3, l3, l2, u, w, ctx, provider); break;
                      case 2: r = recurrence::residual_l2_step(n, l, n3, l3, l2, u, w, ctx, provider); break;
                      default:
                        r = recurrence::residual_fixed_angular(n, l, n3, l3, l2, u, w, ctx, provider);
                    }
                    worst[rel] = max(worst[rel], r);
                    ++cases[rel];
                  } catch (const IndexViolation&) {
                    // tuple not admissible for this relation; skipped
                  }
                }
              }
        }
      }
    }

  std::vector<CheckResult> out;
  for (int rel = 0; rel < 4; ++rel) out.push_back(make_result(names[rel], worst[rel], bound, cases[rel]));
  return out;
}

CheckResult suite_orthogonality(long nprincipal, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Real bound = Real::parse("1e-10", prec);
  Real worst = Real::of(0L, prec);
  Real z = Real::of(1L, prec);
  Vec3 kzero(Real::of(0L, prec), Real::of(0L, prec), Real::of(0L, prec));
  long cases = 0;
  for (long ni = 1; ni <= nprincipal; ++ni)
    for (long li = 0; li < ni; ++li)
      for (long mi = -li; mi <= li; ++mi)
        for (long nf = 1; nf <= nprincipal; ++nf)
          for (long lf = 0; lf < nf; ++lf)
            for (long mf = -lf; mf <= lf; ++mf) {
              auto t = TransitionSpec::hydrogen(z, BoundLabel{ni - 1, li, mi}, BoundLabel{nf - 1, lf, mf});
              Complex f = formfactor::form_factor(t, kzero, ctx).value;
              long delta = (ni == nf && li == lf && mi == mf) ? 1 : 0;
              Real dev = max(abs(f.re - delta), abs(f.im));
              worst = max(worst, dev);
              ++cases;
            }
  return make_result("hydrogen k=0 orthogonality", worst, bound, cases);
}

CheckResult suite_oracle(long nmax, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Real bound = Real::parse("1e-8", prec);
  Real worst = Real::of(0L, prec);
  Real one = Real::of(1L, prec);
  long cases = 0;
  std::vector<Real> ks = {one / 10, one, Real::of(10L, prec)};
  for (int channel = 0; channel < 2; ++channel)
    for (long n = 0; n <= nmax; ++n)
      for (long np = 0; np <= nmax; ++np) {
        fockgeom::Channel ch = channel == 0 ? fockgeom::Channel::hydrogen(one, n + 1, np + 1)
                                            : fockgeom::Channel::make(one, one);
        for (const Real& k : ks) {
          oracle::RadialQuadrature quad(ch, n, np, k, ctx);
          for (long l = 0; l <= n; ++l)
            for (long lp = 0; lp <= np; ++lp)
              for (long l2 = 0; l2 <= l + lp + 1; ++l2) {
                TransitionSpec t{BoundLabel{n, l, 0}, BoundLabel{np, lp, 0}, ch,
                                 channel == 0 ? formfactor::Mode::hydrogen : formfactor::Mode::sturmian};
                Real closed = formfactor::radial_matrix_element(t, l2, k, ctx);
                Real integral = quad.integrate(l, lp, l2);
                Real res = abs(closed - integral) / max(abs(closed), abs(integral));
                worst = max(worst, res);
                ++cases;
              }
        }
      }
  return make_result("radial matrix element vs quadrature", worst, bound, cases);
}

CheckResult suite_expansion(long nmax_expansion, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Real bound = Real::parse("1e-6", prec);
  Real worst = Real::of(0L, prec);
  long cases = 0;
  auto ch = fockgeom::Channel::make(Real::of(0.8, prec), Real::of(1.1, prec));
  Vec3 kvec(Real::of(0L, prec), Real::of(0L, prec), Real::of(0.35, prec));
  Vec3 pvec(Real::of(0.3, prec), Real::of(-0.2, prec), Real::of(0.5, prec));
  for (long n = 0; n <= nmax_expansion; ++n)
    for (long l = 0; l <= n; ++l) {
      long m = l > 0 ? 1 : 0;
      auto chk = oracle::expansion_check(n, l, m, ch, kvec, pvec, n + 12, ctx);
      Real err = (chk.lhs - chk.rhs).abs() / chk.lhs.abs();
      worst = max(worst, err);
      ++cases;
    }
  return make_result("multipole expansion truncation at n3max = n+12", worst, bound, cases);
}

std::vector<CheckResult> suite_dipole(long nmax, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Real bound = Real::parse("1e-12", prec);
  Real worst_delta = Real::of(0L, prec);
  Real worst_f1 = Real::of(0L, prec);
  long cases_delta = 0, cases_f1 = 0;

  for (long n = 0; n <= nmax; ++n)
    for (long n3 = 0; n3 <= nmax; ++n3) {
      Real u = Real::of(n3 + 1, prec) / (n + 1);
      for (long l = 0; l <= std::min(n, n3); ++l) {
        Real val = pcoeff::p_dipole0(n, l, n3, u, ctx).value;
        Rational diag(ExactInt(2 * (n + 1)) * exactmath::factorial_exact(n - l),
                      exactmath::factorial_exact(n + l + 1));
        Real scale = Real::of(diag, prec);
        Real dev = (n == n3) ? abs(val + scale) / scale : abs(val) / scale;
        worst_delta = max(worst_delta, dev);
        ++cases_delta;
      }
      if (n != n3)
        for (long l = 1; l <= n && l - 1 <= n3; ++l) {
          Real f1 = pcoeff::dipole_f(1, n, l, n3, u, ctx);
          Real scale = max(abs(pcoeff::dipole_f(0, n, l, n3, u, ctx)),
                           abs(pcoeff::dipole_f(2, n, l, n3, u, ctx)));
          worst_f1 = max(worst_f1, abs(f1) / scale);
          ++cases_f1;
        }
    }
  return {make_result("monopole Kronecker structure at hydrogen u", worst_delta, bound, cases_delta),
          make_result("dipole f1 term vanishes at hydrogen u", worst_f1, bound, cases_f1)};
}

CheckResult check_elastic_1s(const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Real bound = Real::parse("1e-10", prec);
  Real worst = Real::of(0L, prec);
  Real one = Real::of(1L, prec);
  auto t = TransitionSpec::hydrogen(one, BoundLabel{0, 0, 0}, BoundLabel{0, 0, 0});
  Real zero = Real::of(0L, prec);
  long cases = 0;
  for (double kd : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    Real k = Real::of(kd, prec);
    Real expect = 16L / pow_si(k * k + 4, 2);
    Complex f = formfactor::form_factor(t, Vec3(zero, zero, k), ctx).value;
    Real dev = max(abs(f.re - expect), abs(f.im)) / expect;
    // the ground-state closed form must reproduce the same values
    Real f1s = formfactor::form_factor_1s(0, 0, t.channel, k, ctx);
    dev = max(dev, abs(f1s - expect) / expect);
    worst = max(worst, dev);
    ++cases;
  }
  return make_result("elastic 1s form factor 16/(k^2+4)^2", worst, bound, cases);
}

CheckResult check_dcoeff(const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  Real bound = rel_tolerance(ctx, 0.5);
  Real worst = Real::of(0L, prec);
  Real kzero = Real::of(0L, prec);
  auto ch = fockgeom::Channel::make(Real::of(3L, prec) / 10, Real::of(1L, prec));
  long cases = 0;
  for (long n = 0; n <= 3; ++n)
    for (long l = 0; l <= n; ++l)
      for (long n2 = 0; n2 <= 3; ++n2)
        for (long l2 = 0; l2 <= n2; ++l2)
          for (long n3 = 0; n3 <= 3; ++n3)
            for (long l3 = 0; l3 <= n3; ++l3) {
              if (n2 - n3 + l < 0) continue;
              Real a = formfactor::coeff_D(n, n2, n3, l, l3, l2, ch, kzero, ctx);
              Real b = formfactor::coeff_D_sum(n, n2, n3, l, l3, l2, ch, kzero, ctx);
              Real res = abs(a - b) / max(max(abs(a), abs(b)), Real::parse("1e-30", prec));
              worst = max(worst, res);
              ++cases;
            }
  // outside the region both forms must refuse
  bool threw = false;
  try {
    auto bad = fockgeom::Channel::make(Real::of(1L, prec), Real::of(1L, prec) / 2);
    formfactor::coeff_D(1, 1, 1, 0, 0, 0, bad, kzero, ctx);
  } catch (const ConvergenceRegionViolated&) {
    threw = true;
  }
  if (!threw) worst = Real::of(1L, prec);
  return make_result("solid-harmonic coefficients: sum vs 3F2 + region guard", worst, bound, cases);
}

CheckResult check_laplace_order(const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits;
  auto ch = fockgeom::Channel::make(Real::of(0.8, prec), Real::of(1.1, prec));
  Vec3 kvec(Real::of(0L, prec), Real::of(0L, prec), Real::of(0.35, prec));
  Vec3 pvec(Real::of(0.4, prec), Real::of(0.25, prec), Real::of(-0.3, prec));
  double worst_order = 99;
  long cases = 0;
  for (auto [n, l, m] : std::vector<std::array<long, 3>>{{0, 0, 0}, {2, 1, 0}, {3, 2, 1}}) {
    Real h = Real::of(1L, prec) / 100;
    Real r1 = oracle::laplace_fd_check(n, l, m, ch, kvec, pvec, h, ctx).residual;
    Real r2 = oracle::laplace_fd_check(n, l, m, ch, kvec, pvec, h / 2, ctx).residual;
    Real r3 = oracle::laplace_fd_check(n, l, m, ch, kvec, pvec, h / 4, ctx).residual;
    double o1 = std::log2((r1 / r2).to_double());
    double o2 = std::log2((r2 / r3).to_double());
    worst_order = std::min({worst_order, o1, o2});
    cases += 2;
  }
  CheckResult r;
  r.name = "finite-difference Laplacian convergence order";
  r.measured = worst_order;
  r.bound = 1.9;
  r.pass = worst_order >= 1.9;
  r.cases = cases;
  return r;
}

bool suite_known(const std::string& name) {
  return name == "backends" || name == "recurrences" || name == "orthogonality" || name == "oracle" ||
         name == "expansion" || name == "all";
}

std::vector<CheckResult> run_suite(const std::string& name, long nmax, const PrecisionContext& ctx) {
  std::vector<CheckResult> out;
  if (name == "backends" || name == "all") out.push_back(suite_backends(nmax < 0 ? 6 : nmax, 20, ctx));
  if (name == "recurrences" || name == "all") {
    auto rs = suite_recurrences(nmax < 0 ? 5 : nmax, ctx);
    out.insert(out.end(), rs.begin(), rs.end());
  }
  if (name == "orthogonality" || name == "all") out.push_back(suite_orthogonality(nmax < 0 ? 6 : nmax, ctx));
  if (name == "oracle" || name == "all") out.push_back(suite_oracle(nmax < 0 ? 3 : nmax, ctx));
  if (name == "expansion" || name == "all") out.push_back(suite_expansion(nmax < 0 ? 2 : nmax, ctx));
  return out;
}

}  // namespace hydroform::validate
