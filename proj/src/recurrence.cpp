#include "hydroform/recurrence.hpp"

#include <map>
#include <tuple>

namespace hydroform::recurrence {

namespace {

// accumulate coeff * P(idx) into (sum, scale); zero coefficients drop the
// term entirely (the relations degenerate that way at the lattice edges),
// nonzero ones require an admissible index.
struct ResidualAcc {
  Real sum, scale;
  const Real *u, *w;
  const PrecisionContext* ctx;
  const PProvider* provider;

  ResidualAcc(const Real& uu, const Real& ww, const PrecisionContext& c, const PProvider& prov)
      : sum(Real::of(0L, c.bits)), scale(Real::of(0L, c.bits)), u(&uu), w(&ww), ctx(&c), provider(&prov) {}

  void term(const Real& coeff, const PIndex& idx) {
    if (coeff.is_zero()) return;
    idx.require();
    Real p = *provider ? (*provider)(idx) : pcoeff::p_series(idx, *u, *w, *ctx).value;
    sum += coeff * p;
    scale = max(scale, abs(p));
  }
  void term(long coeff, const PIndex& idx) { term(Real::of(coeff, ctx->bits), idx); }

  Real residual() const {
    if (scale.is_zero()) return abs(sum);
    return abs(sum) / scale;
  }
};

}  // namespace

Real residual_rec1_first(long n, long l, long n3, long l3, long l2, const Real& u, const Real& w,
                         const PrecisionContext& ctx, const PProvider& provider) {
  ResidualAcc acc(u, w, ctx, provider);
  acc.term(n3 + l3 + 1, PIndex{n, l, n3, l3, l2});
  acc.term(-(n3 - l3), PIndex{n, l, n3 - 1, l3, l2});
  acc.term(-1, PIndex{n, l, n3, l3 - 1, l2});
  acc.term(1, PIndex{n, l, n3 - 1, l3 - 1, l2});
  return acc.residual();
}

Real residual_rec1_second(long n, long l, long n3, long l3, long l2, const Real& u, const Real& w,
                          const PrecisionContext& ctx, const PProvider& provider) {
  ResidualAcc acc(u, w, ctx, provider);
  acc.term(n + l + 1, PIndex{n, l, n3, l3, l2});
  acc.term(-(n - l), PIndex{n - 1, l, n3, l3, l2});
  acc.term(-1, PIndex{n, l - 1, n3, l3, l2});
  acc.term(1, PIndex{n - 1, l - 1, n3, l3, l2});
  return acc.residual();
}

Real residual_l2_step(long n, long l, long n3, long l3, long l2, const Real& u, const Real& w,
                      const PrecisionContext& ctx, const PProvider& provider) {
  const mpfr_prec_t prec = ctx.bits;
  ResidualAcc acc(u, w, ctx, provider);
  acc.term(n + l + 2, PIndex{n + 1, l, n3, l3, l2});
  acc.term(n - l, PIndex{n - 1, l, n3, l3, l2});
  acc.term(-2 * (n + 1), PIndex{n, l, n3, l3, l2});
  Real c = Real::of(-(l2 + 1), prec);
  acc.term(c * (n + l + 2) * (1 - u), PIndex{n + 1, l, n3, l3, l2 + 1});
  acc.term(c * (n - l) * (1 + u), PIndex{n - 1, l, n3, l3, l2 + 1});
  acc.term(c * 2 * (u * (n3 + l2 + 2) - (n + 1)), PIndex{n, l, n3, l3, l2 + 1});
  acc.term(c * -2 * (n3 + l3 + 2) * u, PIndex{n, l, n3 + 1, l3, l2 + 1});
  return acc.residual();
}

Real residual_fixed_angular(long n, long l, long n3, long l3, long l2, const Real& u, const Real& w,
                            const PrecisionContext& ctx, const PProvider& provider) {
  ResidualAcc acc(u, w, ctx, provider);
  acc.term((n3 + l3 + 2) * u, PIndex{n, l, n3 + 1, l3, l2});
  acc.term((n3 - l3) * u, PIndex{n, l, n3 - 1, l3, l2});
  acc.term(-(n + l + 2), PIndex{n + 1, l, n3, l3, l2});
  acc.term(-(n - l), PIndex{n - 1, l, n3, l3, l2});
  acc.term(2 * ((n + 1) - u * (n3 + 1)), PIndex{n, l, n3, l3, l2});
  return acc.residual();
}

PropagationResult propagate_lattice(const std::vector<PValue>& seeds, const PIndex& target, const Real& u,
                                    const Real& w, const PrecisionContext& ctx) {
  target.require();
  if (u.is_zero()) throw DegenerateU("propagate_lattice: u = 0");
  const mpfr_prec_t prec = ctx.bits;
  const long l = target.l, l3 = target.l3, l2 = target.l2;

  std::map<std::pair<long, long>, Real> known;
  Real seed_scale = Real::of(0L, prec);
  long nmax = target.n, n3max = target.n3;
  for (const PValue& s : seeds) {
    if (s.index.l != l || s.index.l3 != l3 || s.index.l2 != l2) continue;
    known.emplace(std::make_pair(s.index.n, s.index.n3), s.value);
    seed_scale = max(seed_scale, abs(s.value));
    nmax = std::max(nmax, s.index.n);
    n3max = std::max(n3max, s.index.n3);
  }
  if (known.empty()) throw InsufficientSeeds("propagate_lattice: no seeds share the target angular indices");
  if (auto it = known.find({target.n, target.n3}); it != known.end())
    return PropagationResult{PValue{target, u, w, it->second, pcoeff::Backend::series}, 0, false};

  // five-point stencil around a center (cn, cn3); terms with zero
  // coefficients are absent from the relation
  struct Arm {
    long n, n3;
    Real coeff;
  };
  auto arms_of = [&](long cn, long cn3) {
    std::vector<Arm> arms;
    auto push = [&arms](long an, long an3, Real c) {
      if (!c.is_zero()) arms.push_back(Arm{an, an3, std::move(c)});
    };
    push(cn, cn3 + 1, Real::of(cn3 + l3 + 2, prec) * u);
    if (cn3 > l3) push(cn, cn3 - 1, Real::of(cn3 - l3, prec) * u);
    push(cn + 1, cn3, Real::of(-(cn + l + 2), prec));
    if (cn > l) push(cn - 1, cn3, Real::of(-(cn - l), prec));
    push(cn, cn3, 2 * (Real::of(cn + 1, prec) - u * (cn3 + 1)));
    return arms;
  };

  Real inter_scale = seed_scale;
  long steps = 0;
  bool progress = true;
  while (progress && known.find({target.n, target.n3}) == known.end()) {
    progress = false;
    for (long cn = l; cn <= nmax; ++cn) {
      for (long cn3 = l3; cn3 <= n3max; ++cn3) {
        auto arms = arms_of(cn, cn3);
        long unknown = -1;
        for (size_t a = 0; a < arms.size(); ++a) {
          if (known.count({arms[a].n, arms[a].n3})) continue;
          if (unknown >= 0) {
            unknown = -2;
            break;
          }
          unknown = static_cast<long>(a);
        }
        if (unknown < 0) continue;
        const Arm& solve = arms[static_cast<size_t>(unknown)];
        if (solve.n > nmax || solve.n3 > n3max || solve.n < l || solve.n3 < l3) continue;
        Real rhs = Real::of(0L, prec);
        for (size_t a = 0; a < arms.size(); ++a) {
          if (static_cast<long>(a) == unknown) continue;
          rhs -= arms[a].coeff * known.at({arms[a].n, arms[a].n3});
        }
        Real val = rhs / solve.coeff;
        inter_scale = max(inter_scale, abs(val));
        known.emplace(std::make_pair(solve.n, solve.n3), std::move(val));
        ++steps;
        progress = true;
      }
    }
  }

  auto it = known.find({target.n, target.n3});
  if (it == known.end())
    throw InsufficientSeeds("propagate_lattice: target not determined by the seed stencil");
  bool amplified = !seed_scale.is_zero() && inter_scale / seed_scale > Real::of(1000000L, prec);
  return PropagationResult{PValue{target, u, w, it->second, pcoeff::Backend::series}, steps, amplified};
}

}  // namespace hydroform::recurrence
