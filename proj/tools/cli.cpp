#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "bohrlab/extremal.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/geometry.hpp"
#include "bohrlab/io.hpp"
#include "bohrlab/parallel.hpp"
#include "bohrlab/series.hpp"
#include "bohrlab/solver.hpp"

namespace bohrlab {

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// thrown for parameter problems found after parsing
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecArgs {
  std::string variant;
  double gamma = 0.0;
  double k = 0.0;
  int m = 2;
  std::optional<double> lambda;
  std::optional<double> K;
  std::string t4_constant = "statement";
  std::string area_scaling;
};

const auto kVariantCheck = CLI::Validator(
    [](std::string& s) { return parse_variant(s) ? std::string() : "unknown variant '" + s + "'"; }, "VARIANT",
    "variant");

void add_spec_options(CLI::App* cmd, SpecArgs& a, bool with_gamma_k = true) {
  cmd->add_option("--variant", a.variant, "B C D F G H J T1 T2 T3 T4 (or full names)")
      ->required()
      ->check(kVariantCheck);
  if (with_gamma_k) {
    cmd->add_option("--gamma", a.gamma, "shift parameter in [0, 1)");
    cmd->add_option("--k", a.k, "dilatation bound in [0, 1]");
  }
  cmd->add_option("--m", a.m, "power of the power-term variant");
  cmd->add_option("--lambda", a.lambda, "weight of the squared-area variant");
  cmd->add_option("--K", a.K, "area multiplier override");
  cmd->add_option("--t4-constant", a.t4_constant, "f-area constant: statement|proof")
      ->check(CLI::IsMember({"statement", "proof"}));
  cmd->add_option("--area-scaling", a.area_scaling, "unscaled|gamma_rescaled")
      ->check(CLI::IsMember({"unscaled", "gamma_rescaled"}));
}

FunctionalSpec make_spec(const SpecArgs& a, double gamma, double k) {
  FunctionalSpec s;
  s.variant = *parse_variant(a.variant);
  s.params.gamma = gamma;
  s.params.k = k;
  s.params.m = a.m;
  s.params.lambda = a.lambda;
  s.params.K = a.K;
  s.params.t4_constant = a.t4_constant == "proof" ? T4Constant::ProofDerived : T4Constant::Statement;
  if (a.area_scaling == "unscaled") s.params.area_scaling = AreaScaling::Unscaled;
  if (a.area_scaling == "gamma_rescaled") s.params.area_scaling = AreaScaling::GammaRescaled;
  try {
    s.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return s;
}

void require_open_unit(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0 || v >= 1.0) throw UsageError(std::string(name) + " must lie in [0, 1)");
}

void emit(const io::Table& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << t.to_json().dump(2) << '\n';
  } else {
    t.write_csv(out);
  }
}

// ---------------------------------------------------------------- radius

struct RadiusArgs {
  SpecArgs spec;
  std::vector<double> gammas{0.0};
  std::vector<double> ks{0.0};
  double tol = 1e-8;
  std::string format = "csv";
};

int cmd_radius(const RadiusArgs& a, std::ostream& out, std::ostream& err) {
  if (!(a.tol >= 1e-10)) throw UsageError("--tol must be >= 1e-10");
  std::vector<FunctionalSpec> specs;
  for (double g : a.gammas) {
    for (double k : a.ks) specs.push_back(make_spec(a.spec, g, k));
  }
  std::vector<RadiusResult> results;
  try {
    results = radius_sweep(specs, a.tol, thread_budget());
  } catch (const BracketFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  if (a.format == "json") {
    io::json arr = io::json::array();
    for (const auto& r : results) arr.push_back(io::to_json(r));
    out << arr.dump(2) << '\n';
  } else {
    io::radius_table(results).write_csv(out);
  }
  int code = 0;
  for (const auto& r : results) {
    if (r.reference && !(r.abs_err <= std::max(a.tol, 1e-6))) {
      err << "mismatch: " << variant_code(r.spec.variant) << " gamma=" << io::format_double(r.spec.params.gamma)
          << " k=" << io::format_double(r.spec.params.k) << " rho_star=" << io::format_double(r.rho_star)
          << " reference=" << io::format_double(*r.reference) << '\n';
      code = kExitMismatch;
    }
  }
  return code;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  SpecArgs spec;
  double rho = 0.0;
  std::size_t a_grid = 129;
  std::size_t probes = 0;
  std::uint64_t seed = 1;
  std::string format = "csv";
};

constexpr double kVerifyAMax = 0.99;

// Portable uniform [0, 1) from a fixed-width engine.
double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

EvalResult evaluate_extremal(const FunctionalSpec& spec, double a, double rho) {
  const double gamma = spec.params.gamma;
  const double k = spec.params.k;
  if (!is_background(spec.variant)) {
    return evaluate(spec, HarmonicPair::extremal(gamma, a, k, rho), rho);
  }
  BackgroundInput in{background_extremal_series(gamma, a, rho), std::nullopt};
  if (spec.variant == Variant::Harmonic_F) {
    std::vector<cplx> g(in.f.coeffs().begin(), in.f.coeffs().end());
    g[0] = 0.0;
    for (auto& c : g) c *= -k;
    const auto& env = *in.f.envelope();
    in.g = DiskSeries(gamma, std::move(g), GeometricEnvelope{k * env.scale, env.ratio});
  }
  return eval_background(spec, in, rho);
}

EvalResult evaluate_probe(const FunctionalSpec& spec, double rho, std::mt19937_64& rng) {
  constexpr std::size_t kTerms = 400;
  const double gamma = spec.params.gamma;
  const double k = spec.params.k;
  const std::size_t n_zeros = 1 + static_cast<std::size_t>(uniform(rng) * 3.0);
  std::vector<cplx> zeros;
  for (std::size_t i = 0; i < n_zeros; ++i) {
    zeros.push_back(std::polar(0.8 * std::sqrt(uniform(rng)), 2.0 * std::numbers::pi * uniform(rng)));
  }
  const cplx rotation = std::polar(1.0, 2.0 * std::numbers::pi * uniform(rng));
  const double scale = 0.5 + 0.5 * uniform(rng);
  const CoeffSeries h = blaschke_series(gamma, zeros, rotation, scale, kTerms);
  const double t = uniform(rng);
  const std::vector<cplx> omega{std::polar(t, 2.0 * std::numbers::pi * uniform(rng)),
                                std::polar(0.5 * (1.0 - t), 2.0 * std::numbers::pi * uniform(rng))};
  if (!is_background(spec.variant)) {
    return evaluate(spec, HarmonicPair::with_dilatation(h, omega, k, k), rho);
  }
  BackgroundInput in{restrict_to_unit_disk(h, kTerms + 1), std::nullopt};
  if (spec.variant == Variant::Harmonic_F) {
    std::vector<cplx> g(in.f.coeffs().begin(), in.f.coeffs().end());
    g[0] = 0.0;
    const cplx w = k * omega[0] / std::max(std::abs(omega[0]), 1e-300);
    for (auto& c : g) c *= w;
    in.g = DiskSeries(gamma, std::move(g));
  }
  return eval_background(spec, in, rho);
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const FunctionalSpec spec = make_spec(a.spec, a.spec.gamma, a.spec.k);
  require_open_unit(a.rho, "--rho");
  if (a.a_grid < 2) throw UsageError("--a-grid must be >= 2");

  std::vector<EvalResult> grid(a.a_grid);
  std::vector<double> as(a.a_grid);
  for (std::size_t i = 0; i < a.a_grid; ++i) as[i] = kVerifyAMax * static_cast<double>(i) / static_cast<double>(a.a_grid - 1);
  parallel_for(a.a_grid, thread_budget(), [&](std::size_t i) { grid[i] = evaluate_extremal(spec, as[i], a.rho); });

  std::size_t best = 0;
  bool grid_holds = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].lhs > grid[best].lhs) best = i;
    grid_holds = grid_holds && holds(grid[i]);
  }
  const auto sup = sup_over_family(spec, a.rho);
  const SolverOptions opts;
  const bool sup_ok = sup_excess(spec, a.rho, opts).value <= opts.delta;

  std::size_t probe_violations = 0;
  double probe_max = std::nan("");
  if (a.probes > 0) {
    std::mt19937_64 rng(a.seed);
    probe_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.probes; ++i) {
      const EvalResult r = evaluate_probe(spec, a.rho, rng);
      probe_max = std::max(probe_max, r.lhs);
      if (!holds(r)) ++probe_violations;
    }
  }

  const bool pass = grid_holds && sup_ok && probe_violations == 0;
  std::optional<Witness> witness;
  if (!grid_holds) {
    // violating member closest to the a -> 1 end of the family
    for (std::size_t i = grid.size(); i-- > 0;) {
      if (!holds(grid[i])) {
        witness = Witness{as[i], grid[i].lhs};
        break;
      }
    }
  } else if (!sup_ok) {
    witness = violation_witness(spec, a.rho);
  }

  const RegistryEntry* entry = find_entry(spec);
  std::string expected = "unknown";
  int code = 0;
  if (entry) {
    const double ref = entry->radius(spec.params);
    if (a.rho <= ref) {
      expected = "hold";
      if (!pass) code = kExitMismatch;
    } else {
      expected = "violate";
      if (a.rho > ref + 1e-4 && !witness) code = kExitMismatch;
    }
  }

  io::Table t;
  t.header = {"variant", "gamma",     "k",         "rho",        "reference",       "expected",
              "verdict", "grid_max_lhs", "grid_argmax_a", "grid_tail", "sup_lhs",   "sup_a",
              "witness_a", "witness_lhs", "probes", "probe_max_lhs", "probe_violations"};
  t.add({std::string(variant_code(spec.variant)), spec.params.gamma, spec.params.k, a.rho,
         entry ? entry->radius(spec.params) : std::nan(""), expected, std::string(pass ? "pass" : "fail"),
         grid[best].lhs, as[best], grid[best].tail, sup.value, sup.x, witness ? witness->a : std::nan(""),
         witness ? witness->lhs : std::nan(""), static_cast<long long>(a.probes), probe_max,
         static_cast<long long>(probe_violations)});
  emit(t, a.format, out);
  if (code != 0) err << "verdict contradicts the closed-form radius\n";
  return code;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  SpecArgs spec;
  double rho_min = 0.01;
  double rho_max = 0.99;
  std::size_t n = 99;
  std::string format = "csv";
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const FunctionalSpec spec = make_spec(a.spec, a.spec.gamma, a.spec.k);
  require_open_unit(a.rho_min, "--rho-min");
  require_open_unit(a.rho_max, "--rho-max");
  if (a.rho_min > a.rho_max) throw UsageError("--rho-min exceeds --rho-max");
  if (a.n < 1) throw UsageError("--n must be >= 1");
  struct Row {
    double rho, lhs, arg, excess;
  };
  std::vector<Row> rows(a.n);
  parallel_for(a.n, thread_budget(), [&](std::size_t i) {
    const double rho = a.n == 1 ? a.rho_min
                                : a.rho_min + (a.rho_max - a.rho_min) * static_cast<double>(i) / static_cast<double>(a.n - 1);
    const auto s = sup_over_family(spec, rho);
    rows[i] = {rho, s.value, s.x, sup_excess(spec, rho).value};
  });
  io::Table t;
  t.header = {"variant", "gamma", "k", "rho", "sup_lhs", "argmax_a", "sup_excess"};
  for (const auto& r : rows) {
    t.add({std::string(variant_code(spec.variant)), spec.params.gamma, spec.params.k, r.rho, r.lhs, r.arg, r.excess});
  }
  emit(t, a.format, out);
  return 0;
}

// ---------------------------------------------------------------- extremal

struct ExtremalArgs {
  SpecArgs spec;
  double rho = 1.0 / 3.0;
  std::size_t n = 101;
  std::string proof_fn;
  std::string axis = "a";
  std::string claim;
  double lo = 0.0;
  double hi = 1.0;
  double a = 0.0;
  double x = 0.0;
  std::string format = "csv";
};

Axis parse_axis(const std::string& s) {
  if (s == "rho") return Axis::Rho;
  if (s == "x") return Axis::X;
  return Axis::A;
}

int cmd_extremal(const ExtremalArgs& a, std::ostream& out) {
  if (a.n < 2) throw UsageError("--n must be >= 2");
  if (!a.proof_fn.empty()) {
    const auto fn = parse_proof_fn(a.proof_fn);
    if (!fn) throw UsageError("unknown proof function '" + a.proof_fn + "'");
    ProofParams base{a.a, a.rho, a.spec.gamma, a.spec.k, a.spec.K, a.x};
    const Axis axis = parse_axis(a.axis);
    if (!a.claim.empty()) {
      MonotonicityCheck check;
      check.fn = *fn;
      check.base = base;
      check.inner = {axis, a.lo, a.hi, a.n};
      check.claim = a.claim == "increasing"  ? Claim::Increasing
                    : a.claim == "decreasing" ? Claim::Decreasing
                    : a.claim == "nonpositive" ? Claim::NonPositive
                                               : Claim::NonNegative;
      MonotonicityReport rep;
      try {
        rep = monotonicity_report(check);
      } catch (const std::domain_error& e) {
        throw UsageError(e.what());
      }
      out << io::to_json(rep).dump(2) << '\n';
      return 0;
    }
    io::Table t;
    t.header = {std::string(axis_name(axis)), std::string(proof_fn_name(*fn))};
    for (std::size_t i = 0; i < a.n; ++i) {
      const double v = a.lo + (a.hi - a.lo) * static_cast<double>(i) / static_cast<double>(a.n - 1);
      ProofParams p = base;
      (axis == Axis::A ? p.a : axis == Axis::Rho ? p.rho : p.x) = v;
      try {
        t.add({v, eval_proof_fn(*fn, p)});
      } catch (const std::domain_error& e) {
        throw UsageError(e.what());
      }
    }
    emit(t, a.format, out);
    return 0;
  }
  if (a.spec.variant.empty()) throw UsageError("--variant or --proof-fn is required");
  if (!parse_variant(a.spec.variant)) throw UsageError("unknown variant '" + a.spec.variant + "'");
  const FunctionalSpec spec = make_spec(a.spec, a.spec.gamma, a.spec.k);
  require_open_unit(a.rho, "--rho");
  io::Table t;
  t.header = {"a", "lhs", "excess"};
  for (std::size_t i = 0; i < a.n; ++i) {
    const double av = static_cast<double>(i) / static_cast<double>(a.n - 1);
    t.add({av, closed_form_lhs(spec, av, a.rho), closed_form_excess(spec, av, a.rho)});
  }
  emit(t, a.format, out);
  return 0;
}

// ---------------------------------------------------------------- area

struct AreaArgs {
  double gamma = 0.0;
  double a = 0.5;
  double rho = 0.2;
  std::size_t grid = 512;
  std::string format = "csv";
};

int cmd_area(const AreaArgs& a, std::ostream& out) {
  try {
    require_gamma(a.gamma);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  require_open_unit(a.a, "--a");
  require_open_unit(a.rho, "--rho");
  if (a.grid < 64) throw UsageError("--grid must be >= 64");
  const CoeffSeries s = extremal_series(a.gamma, a.a, a.rho);
  const Estimate analytic = area_analytic(s, a.rho);
  const double quad = area_quadrature(s, a.rho, a.grid);
  const double a2 = a.a * a.a;
  const double closed = (1.0 - a2) * (1.0 - a2) * a.rho * a.rho / std::pow(1.0 - a2 * a.rho * a.rho, 2);
  const double diff = std::abs(analytic.value - quad);
  const bool agree = diff <= 1e-4;
  io::Table t;
  t.header = {"gamma", "a", "rho", "grid", "analytic", "analytic_tail", "quadrature", "closed_form", "abs_diff", "agree"};
  t.add({a.gamma, a.a, a.rho, static_cast<long long>(a.grid), analytic.value, analytic.tail, quad, closed, diff, agree});
  emit(t, a.format, out);
  return agree ? 0 : kExitMismatch;
}

// ---------------------------------------------------------------- figure

struct FigureArgs {
  std::vector<double> gammas{0.0, 0.2, 0.4, 0.5, 0.7};
  std::size_t n = 256;
  std::string format = "csv";
};

int cmd_figure(const FigureArgs& a, std::ostream& out) {
  if (a.n < 2) throw UsageError("--n must be >= 2");
  io::Table t;
  t.header = {"gamma", "index", "re", "im"};
  for (double g : a.gammas) {
    std::vector<cplx> pts;
    try {
      pts = circle_points(make_disk(g), a.n);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
    for (std::size_t i = 0; i < pts.size(); ++i) t.add({g, static_cast<long long>(i), pts[i].real(), pts[i].imag()});
  }
  emit(t, a.format, out);
  return 0;
}

// ---------------------------------------------------------------- sharpk

struct SharpKArgs {
  SpecArgs spec;
  double tol = 1e-8;
  std::string format = "csv";
};

int cmd_sharpk(const SharpKArgs& a, std::ostream& out) {
  const FunctionalSpec spec = make_spec(a.spec, a.spec.gamma, a.spec.k);
  if (spec.variant != Variant::HImprovedArea_T3 && spec.variant != Variant::FImprovedArea_T4) {
    throw UsageError("sharpk needs --variant T3 or T4");
  }
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  const double k = spec.params.k;
  const double K_star = sharpest_K(spec, a.tol);
  const bool t3 = spec.variant == Variant::HImprovedArea_T3;
  const double stated = t3 ? t3_constant(k) : t4_constant_statement(k);
  const double proof = t3 ? t3_constant_proof_form(k) : t4_constant_proof(k);
  const auto verdict = [&] {
    const bool s = std::abs(stated - K_star) <= 1e-3;
    const bool p = std::abs(proof - K_star) <= 1e-3;
    return std::string(s ? (p ? "both" : "statement") : (p ? "proof" : "neither"));
  }();
  io::Table t;
  t.header = {"variant", "gamma", "k", "area_scaling", "K_star", "stated", "stated_admissible", "proof_form",
              "proof_form_admissible", "verdict"};
  t.add({std::string(variant_code(spec.variant)), spec.params.gamma, k,
         std::string(spec.area_scaling() == AreaScaling::Unscaled ? "unscaled" : "gamma_rescaled"), K_star, stated,
         stated <= K_star, proof, proof <= K_star, verdict});
  emit(t, a.format, out);
  return 0;
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bohr-type inequalities on shifted disks: radii, verification and sweeps", "bohrlab"};
  app.require_subcommand(1);

  RadiusArgs radius;
  auto* c_radius = app.add_subcommand("radius", "critical radius by bisection over the extremal family");
  add_spec_options(c_radius, radius.spec, false);
  c_radius->add_option("--gamma", radius.gammas, "shift parameter(s), comma separated")->delimiter(',');
  c_radius->add_option("--k", radius.ks, "dilatation bound(s), comma separated")->delimiter(',');
  c_radius->add_option("--tol", radius.tol, "bisection tolerance (>= 1e-10)");
  add_format(c_radius, radius.format);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "check an inequality at one radius over the extremal family");
  add_spec_options(c_verify, verify.spec);
  c_verify->add_option("--rho", verify.rho, "normalized radius")->required();
  c_verify->add_option("--a-grid", verify.a_grid, "number of family members on [0, 0.99]");
  c_verify->add_option("--probes", verify.probes, "random Blaschke-product probes");
  c_verify->add_option("--seed", verify.seed, "seed for the probes");
  add_format(c_verify, verify.format);

  SweepArgs sweep;
  auto* c_sweep = app.add_subcommand("sweep", "sup of the left-hand side over the family versus rho");
  add_spec_options(c_sweep, sweep.spec);
  c_sweep->add_option("--rho-min", sweep.rho_min);
  c_sweep->add_option("--rho-max", sweep.rho_max);
  c_sweep->add_option("--n", sweep.n, "number of radii");
  add_format(c_sweep, sweep.format);

  ExtremalArgs extremal;
  auto* c_extremal = app.add_subcommand("extremal", "closed-form curves of the family or of a proof function");
  c_extremal->add_option("--variant", extremal.spec.variant, "variant for the lhs/excess curve");
  c_extremal->add_option("--gamma", extremal.spec.gamma);
  c_extremal->add_option("--k", extremal.spec.k);
  c_extremal->add_option("--m", extremal.spec.m);
  c_extremal->add_option("--lambda", extremal.spec.lambda);
  c_extremal->add_option("--K", extremal.spec.K);
  c_extremal->add_option("--rho", extremal.rho);
  c_extremal->add_option("--n", extremal.n, "grid points");
  c_extremal->add_option("--proof-fn", extremal.proof_fn, "xi_T1 xi_T1_d1 xi_T1_d2 xi_T1_d3 F1 F2 W F3 xi_T2 xi_T3 Fx_T3 Phi_T4 Fx_T4 F4");
  c_extremal->add_option("--axis", extremal.axis)->check(CLI::IsMember({"a", "rho", "x"}));
  c_extremal->add_option("--check", extremal.claim, "print a monotonicity report instead of values")
      ->check(CLI::IsMember({"increasing", "decreasing", "nonpositive", "nonnegative"}));
  c_extremal->add_option("--lo", extremal.lo);
  c_extremal->add_option("--hi", extremal.hi);
  c_extremal->add_option("--a", extremal.a);
  c_extremal->add_option("--x", extremal.x);
  add_format(c_extremal, extremal.format);

  AreaArgs area;
  auto* c_area = app.add_subcommand("area", "series area against polar quadrature for the extremal function");
  c_area->add_option("--gamma", area.gamma);
  c_area->add_option("--a", area.a);
  c_area->add_option("--rho", area.rho);
  c_area->add_option("--grid", area.grid, "angular cells (>= 64)");
  add_format(c_area, area.format);

  FigureArgs figure;
  auto* c_figure = app.add_subcommand("figure", "points on the boundary circles of the shifted disks");
  c_figure->add_option("--gammas", figure.gammas)->delimiter(',');
  c_figure->add_option("--n", figure.n, "points per circle");
  add_format(c_figure, figure.format);

  SharpKArgs sharpk;
  auto* c_sharpk = app.add_subcommand("sharpk", "largest admissible area multiplier at the sharp radius");
  add_spec_options(c_sharpk, sharpk.spec);
  c_sharpk->add_option("--tol", sharpk.tol, "bisection tolerance on K");
  add_format(c_sharpk, sharpk.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c_radius) return cmd_radius(radius, out, err);
    if (*c_verify) return cmd_verify(verify, out, err);
    if (*c_sweep) return cmd_sweep(sweep, out);
    if (*c_extremal) return cmd_extremal(extremal, out);
    if (*c_area) return cmd_area(area, out);
    if (*c_figure) return cmd_figure(figure, out);
    if (*c_sharpk) return cmd_sharpk(sharpk, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace bohrlab
