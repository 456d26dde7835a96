// hydroform: hydrogenic and Sturmian form-factor computations on top of the
// multipole-coefficient backends.  Subcommands: compute, scan, validate,
// table.  Exit codes: 0 success, 1 validation failure, 2 usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "hydroform/tableio.hpp"
#include "hydroform/validate.hpp"

using namespace hydroform;
using formfactor::BoundLabel;
using formfactor::PRoute;
using formfactor::TransitionSpec;
using json = nlohmann::ordered_json;

namespace {

struct TransitionArgs {
  std::string mode = "hydrogen";
  double z = 1.0;
  double alpha = 1.0, beta = 1.0;
  long ni = 1, li = 0, mi = 0;
  long nf = 1, lf = 0, mf = 0;
};

void add_transition_flags(CLI::App* cmd, TransitionArgs& a) {
  cmd->add_option("--mode", a.mode, "hydrogen (alpha, beta from Z and the principal numbers) or sturmian")
      ->check(CLI::IsMember({"hydrogen", "sturmian"}))
      ->capture_default_str();
  cmd->add_option("--Z", a.z, "nuclear charge (hydrogen mode)")->capture_default_str();
  cmd->add_option("--alpha", a.alpha, "initial-state scale (sturmian mode)")->capture_default_str();
  cmd->add_option("--beta", a.beta, "final-state scale (sturmian mode)")->capture_default_str();
  cmd->add_option("--ni", a.ni, "initial principal quantum number (>= 1)")->capture_default_str();
  cmd->add_option("--li", a.li, "initial orbital momentum (0 <= li <= ni-1)")->capture_default_str();
  cmd->add_option("--mi", a.mi, "initial magnetic quantum number")->capture_default_str();
  cmd->add_option("--nf", a.nf, "final principal quantum number (>= 1)")->capture_default_str();
  cmd->add_option("--lf", a.lf, "final orbital momentum (0 <= lf <= nf-1)")->capture_default_str();
  cmd->add_option("--mf", a.mf, "final magnetic quantum number")->capture_default_str();
}

// principal quantum numbers are converted internally to the shifted
// convention n = principal - 1
TransitionSpec make_transition(const TransitionArgs& a, const PrecisionContext& ctx) {
  if (a.ni < 1) throw CLI::ValidationError("--ni must be >= 1");
  if (a.nf < 1) throw CLI::ValidationError("--nf must be >= 1");
  if (a.li < 0 || a.li > a.ni - 1) throw CLI::ValidationError("li exceeds ni-1");
  if (a.lf < 0 || a.lf > a.nf - 1) throw CLI::ValidationError("lf exceeds nf-1");
  if (std::labs(a.mi) > a.li) throw CLI::ValidationError("|mi| exceeds li");
  if (std::labs(a.mf) > a.lf) throw CLI::ValidationError("|mf| exceeds lf");
  BoundLabel i{a.ni - 1, a.li, a.mi}, f{a.nf - 1, a.lf, a.mf};
  if (a.mode == "hydrogen") {
    if (!(a.z > 0)) throw CLI::ValidationError("--Z must be positive");
    return TransitionSpec::hydrogen(Real::of(a.z, ctx.bits), i, f);
  }
  if (!(a.alpha > 0) || !(a.beta > 0)) throw CLI::ValidationError("--alpha and --beta must be positive");
  return TransitionSpec::sturmian(Real::of(a.alpha, ctx.bits), Real::of(a.beta, ctx.bits), i, f);
}

PRoute route_of(const std::string& name) {
  if (name == "series") return PRoute::series;
  if (name == "gegenbauer") return PRoute::gegenbauer;
  return PRoute::auto_check;
}

Vec3 kvec_of(double k, double ktheta, double kphi, const PrecisionContext& ctx) {
  Real kk = Real::of(k, ctx.bits);
  Real th = Real::of(ktheta, ctx.bits), ph = Real::of(kphi, ctx.bits);
  Real st(ctx.bits), ct(ctx.bits), sp(ctx.bits), cp(ctx.bits);
  sin_cos(st, ct, th);
  sin_cos(sp, cp, ph);
  return Vec3(kk * st * cp, kk * st * sp, kk * ct);
}

int run_compute(const TransitionArgs& ta, double k, double ktheta, double kphi, const std::string& backend,
                const std::string& format, const PrecisionContext& ctx) {
  if (k < 0) throw CLI::ValidationError("--k must be >= 0");
  TransitionSpec t = make_transition(ta, ctx);
  auto ff = formfactor::form_factor(t, kvec_of(k, ktheta, kphi, ctx), ctx, route_of(backend));

  if (format == "csv") {
    std::printf("F_real,F_imag,absF2\n%s,%s,%s\n", tableio::e17(ff.value.re).c_str(),
                tableio::e17(ff.value.im).c_str(), tableio::e17(ff.value.abs2()).c_str());
    return 0;
  }
  json rec;
  rec["schema"] = 1;
  rec["transition"] = {{"mode", ta.mode}, {"ni", ta.ni}, {"li", ta.li}, {"mi", ta.mi},
                       {"nf", ta.nf},     {"lf", ta.lf}, {"mf", ta.mf}};
  rec["transition"]["alpha"] = t.channel.alpha.str();
  rec["transition"]["beta"] = t.channel.beta.str();
  rec["kinematics"] = {{"k", ff.kin.kmag.str()}, {"u", t.channel.u.str()},   {"v", ff.kin.v.str()},
                       {"w", ff.kin.w.str()},    {"theta", ff.kin.theta.str()}, {"phi", ff.kin.phi.str()}};
  rec["F_real"] = ff.value.re.str();
  rec["F_imag"] = ff.value.im.str();
  rec["absF2"] = ff.value.abs2().str();
  json partials = json::array();
  for (const auto& [l2, term] : ff.l2_terms)
    partials.push_back({{"l2", l2}, {"re", term.re.str()}, {"im", term.im.str()}});
  rec["l2_partials"] = std::move(partials);
  rec["backend"] = backend;
  rec["precision_bits"] = static_cast<long>(ctx.bits);
  std::cout << rec.dump(2) << "\n";
  return 0;
}

int run_scan(const TransitionArgs& ta, double lnk_min, double lnk_max, long points, const std::string& backend,
             const std::string& format, const PrecisionContext& ctx) {
  if (points < 1) throw CLI::ValidationError("--points must be >= 1");
  if (points > 1 && !(lnk_min < lnk_max)) throw CLI::ValidationError("--lnk-min must be below --lnk-max");
  TransitionSpec t = make_transition(ta, ctx);
  std::vector<Real> grid;
  grid.reserve(points);
  for (long i = 0; i < points; ++i) {
    double frac = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    grid.push_back(Real::of(lnk_min + (lnk_max - lnk_min) * frac, ctx.bits));
  }
  auto table = formfactor::gos_scan(t, grid, ctx, route_of(backend));
  if (format == "json") {
    json rows = json::array();
    for (size_t i = 0; i < table.rows.size(); ++i) {
      const auto& r = table.rows[i];
      json rec = {{"schema", 1}, {"lnk", r.lnk.str()}, {"k", r.k.str()}, {"absF2", r.absF2.str()}};
      json parts = json::array();
      for (size_t j = 0; j < table.l2_values.size(); ++j)
        parts.push_back({{"l2", table.l2_values[j]}, {"absF2", r.l2_partials[j].str()}});
      rec["l2_partials"] = std::move(parts);
      rows.push_back(std::move(rec));
    }
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  std::fputs(tableio::gos_csv(table).c_str(), stdout);
  return 0;
}

int run_validate(const std::string& suite, long nmax, const PrecisionContext& ctx) {
  auto results = validate::run_suite(suite, nmax, ctx);
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("%-52s  measured=%.3e  bound=%.3e  cases=%ld  %s\n", r.name.c_str(), r.measured, r.bound,
                r.cases, r.pass ? "PASS" : "FAIL");
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

int run_table(bool single, long n, long l, long n3, long l3, long l2, long nmax, long n3max, double u_in,
              double w_in, const std::string& backend, const std::string& format, const PrecisionContext& ctx) {
  if (!(u_in > 0)) throw CLI::ValidationError("--u must be positive (u = 0 is degenerate)");
  if (!(w_in > 0)) throw CLI::ValidationError("--w must be positive");
  Real u = Real::of(u_in, ctx.bits), w = Real::of(w_in, ctx.bits);
  std::vector<pcoeff::PIndex> indices;
  if (single) {
    pcoeff::PIndex idx{n, l, n3, l3, l2};
    if (!idx.admissible()) throw CLI::ValidationError("index violates l <= n, l3 <= n3, l-l2+l3+1 >= 0");
    indices.push_back(idx);
  } else {
    if (n3max < 0) n3max = nmax;
    indices = validate::admissible_indices(std::max(nmax, n3max));
    std::erase_if(indices, [&](const pcoeff::PIndex& i) { return i.n > nmax || i.n3 > n3max; });
  }
  json rows = json::array();
  if (format == "csv") std::printf("n,l,n3,l3,l2,u,w,value,backend\n");
  for (const auto& idx : indices) {
    pcoeff::PValue v = backend == "series"      ? pcoeff::p_series(idx, u, w, ctx)
                       : backend == "gegenbauer" ? pcoeff::p_gegenbauer(idx, u, w, ctx)
                                                  : pcoeff::p_auto(idx, u, w, ctx);
    if (format == "csv") {
      std::printf("%ld,%ld,%ld,%ld,%ld,%s,%s,%s,%s\n", idx.n, idx.l, idx.n3, idx.l3, idx.l2,
                  tableio::e17(u).c_str(), tableio::e17(w).c_str(), tableio::e17(v.value).c_str(),
                  pcoeff::backend_name(v.backend));
    } else {
      rows.push_back({{"schema", 1},
                      {"n", idx.n},
                      {"l", idx.l},
                      {"n3", idx.n3},
                      {"l3", idx.l3},
                      {"l2", idx.l2},
                      {"u", u.str()},
                      {"w", w.str()},
                      {"value", v.value.str()},
                      {"backend", pcoeff::backend_name(v.backend)}});
    }
  }
  if (format == "json") std::cout << rows.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hydroform: hydrogenic / Sturmian form factors via multipole coefficients"};
  app.require_subcommand(1);
  long bits = 128;
  app.add_option("--precision-bits", bits, "significand bits of all real arithmetic (>= 64)")
      ->envname("HYDROFORM_PRECISION_BITS")
      ->capture_default_str();
  app.fallthrough();

  TransitionArgs ta;
  std::string backend = "auto", format;

  auto* compute = app.add_subcommand("compute", "single form-factor evaluation");
  double k = 0.0, ktheta = 0.0, kphi = 0.0;
  add_transition_flags(compute, ta);
  compute->add_option("--k", k, "momentum transfer magnitude (atomic units)")->capture_default_str();
  compute->add_option("--ktheta", ktheta, "polar angle of k (radians; default along the polar axis)")
      ->capture_default_str();
  compute->add_option("--kphi", kphi, "azimuth of k (radians)")->capture_default_str();
  compute->add_option("--backend", backend, "series, gegenbauer, or auto (= both + agreement check)")
      ->check(CLI::IsMember({"series", "gegenbauer", "auto"}))
      ->capture_default_str();
  compute->add_option("--format", format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* scan = app.add_subcommand("scan", "|F|^2 over a log-k grid (CSV)");
  double lnk_min = -3.0, lnk_max = 3.0;
  long points = 200;
  add_transition_flags(scan, ta);
  scan->add_option("--lnk-min", lnk_min, "lower ln|k| bound")->capture_default_str();
  scan->add_option("--lnk-max", lnk_max, "upper ln|k| bound")->capture_default_str();
  scan->add_option("--points", points, "grid size (>= 1)")->capture_default_str();
  scan->add_option("--backend", backend, "series, gegenbauer, or auto")
      ->check(CLI::IsMember({"series", "gegenbauer", "auto"}));
  scan->add_option("--format", format, "csv (default) or json")->check(CLI::IsMember({"json", "csv"}));

  auto* val = app.add_subcommand("validate", "run a self-validation suite");
  std::string suite = "all";
  long nmax = -1;
  val->add_option("--suite", suite, "backends, recurrences, orthogonality, oracle, expansion, or all")
      ->capture_default_str();
  val->add_option("--nmax", nmax, "sweep bound (suite-specific default when omitted)")->capture_default_str();

  auto* tab = app.add_subcommand("table", "emit P coefficients over an index lattice");
  long tn = 0, tl = 0, tn3 = 0, tl3 = 0, tl2 = 0, tn3max = -1;
  long tnmax = -1;
  double tu = 1.0, tw = 1.0;
  auto* optn = tab->add_option("--n", tn, "single index: n");
  tab->add_option("--l", tl, "single index: l");
  tab->add_option("--n3", tn3, "single index: n3");
  tab->add_option("--l3", tl3, "single index: l3");
  tab->add_option("--l2", tl2, "single index: l2");
  tab->add_option("--nmax", tnmax, "lattice mode: emit every admissible index with n <= nmax");
  tab->add_option("--n3max", tn3max, "lattice mode: bound for n3 (defaults to nmax)");
  tab->add_option("--u", tu, "argument u = alpha/beta (> 0)")->required();
  tab->add_option("--w", tw, "argument w (> 0)")->required();
  tab->add_option("--backend", backend, "series, gegenbauer, or auto")
      ->check(CLI::IsMember({"series", "gegenbauer", "auto"}));
  tab->add_option("--format", format, "csv (default) or json")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (bits < 64) {
    std::fprintf(stderr, "error: --precision-bits must be >= 64\n");
    return 2;
  }
  PrecisionContext ctx(bits);

  try {
    if (compute->parsed()) return run_compute(ta, k, ktheta, kphi, backend, format.empty() ? "json" : format, ctx);
    if (scan->parsed()) return run_scan(ta, lnk_min, lnk_max, points, backend, format.empty() ? "csv" : format, ctx);
    if (val->parsed()) {
      if (!validate::suite_known(suite)) {
        std::fprintf(stderr, "error: unknown suite '%s'\n", suite.c_str());
        return 2;
      }
      return run_validate(suite, nmax, ctx);
    }
    if (tab->parsed())
      return run_table(tnmax < 0, tn, tl, tn3, tl3, tl2, tnmax, tn3max, tu, tw, backend,
                       format.empty() ? "csv" : format, ctx);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const BadQuantumNumbers& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const IndexViolation& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const DegenerateU& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  (void)optn;
  return 2;
}
