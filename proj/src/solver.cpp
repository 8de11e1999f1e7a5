#include "bohrlab/solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bohrlab/parallel.hpp"

namespace bohrlab {

namespace {

double shifted_radius(const Params& p) { return 1.0 / (2.0 * p.k + 3.0); }
double background_radius(const Params& p) { return (1.0 + p.gamma) / (3.0 + p.gamma); }
bool always(const Params&) { return true; }

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> r;
  r.push_back({"T1", Variant::Refined_T1, always, [](const Params&) { return 1.0 / 3.0; }, std::nullopt, true, ""});
  r.push_back({"T2-k1", Variant::Harmonic_T2, [](const Params& p) { return p.k == 1.0; },
               [](const Params&) { return 0.2; }, std::nullopt, true, "k = 1"});
  r.push_back({"T2", Variant::Harmonic_T2, always, shifted_radius, std::nullopt, true, ""});
  r.push_back({"T3", Variant::HImprovedArea_T3,
               [](const Params& p) {
                 return (!p.K || *p.K <= t3_constant(p.k)) &&
                        p.area_scaling.value_or(AreaScaling::Unscaled) == AreaScaling::Unscaled;
               },
               shifted_radius, std::function<double(double)>(t3_constant), true, ""});
  r.push_back({"T4", Variant::FImprovedArea_T4, [](const Params& p) { return p.k < 1.0; }, shifted_radius,
               std::function<double(double)>(t4_constant_statement), false,
               "stated constant exceeds the sharpest admissible K for gamma >= 0.5 at k = 0 under the displayed "
               "1/(1-gamma)^2 area scaling"});
  r.push_back({"B", Variant::Classical_B, always, background_radius, std::nullopt, true, ""});
  r.push_back({"C", Variant::ImprovedArea_C, [](const Params& p) { return !p.K || *p.K <= 8.0 / 9.0; },
               background_radius, std::nullopt, true, ""});
  r.push_back({"D", Variant::Refined_D, always, background_radius, std::nullopt, true, ""});
  r.push_back({"F-k1", Variant::Harmonic_F, [](const Params& p) { return p.k == 1.0; },
               [](const Params& p) { return (1.0 + p.gamma) / (5.0 + p.gamma); }, std::nullopt, true, "k = 1"});
  r.push_back({"F", Variant::Harmonic_F, always,
               [](const Params& p) { return (1.0 + p.gamma) / (3.0 + 2.0 * p.k + p.gamma); }, std::nullopt, true, ""});
  r.push_back({"G", Variant::PowerM_G, [](const Params& p) { return power_tau(p.gamma, p.m) >= 0.0; },
               background_radius, std::nullopt, true, "only where the power-term weight is non-negative"});
  return r;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = build_registry();
  return entries;
}

const RegistryEntry* find_entry(const FunctionalSpec& spec) {
  for (const auto& e : registry()) {
    if (e.variant == spec.variant && e.applies(spec.params)) return &e;
  }
  return nullptr;
}

numeric::Extremum sup_over_family(const FunctionalSpec& spec, double rho, const SolverOptions& opts) {
  spec.validate();
  return numeric::grid_golden_max([&](double a) { return closed_form_lhs(spec, a, rho); }, 0.0, opts.a_cap,
                                  opts.a_grid, opts.a_tol);
}

numeric::Extremum sup_excess(const FunctionalSpec& spec, double rho, const SolverOptions& opts) {
  spec.validate();
  return numeric::grid_golden_max([&](double a) { return closed_form_excess(spec, a, rho); }, 0.0, opts.a_cap,
                                  opts.a_grid, opts.a_tol);
}

RadiusResult critical_radius(const FunctionalSpec& spec, double tol, const SolverOptions& opts) {
  if (!(tol >= 1e-10)) throw std::domain_error("tol must be >= 1e-10");
  spec.validate();
  const auto violated = [&](double rho) { return sup_excess(spec, rho, opts).value > opts.delta; };
  double lo = kRadiusBracketLo;
  double hi = kRadiusBracketHi;
  if (violated(lo) || !violated(hi)) {
    std::ostringstream os;
    os << "no sign change of the sup excess on [" << lo << ", " << hi << "] for " << variant_name(spec.variant);
    throw BracketFailure(os.str());
  }
  RadiusResult res;
  res.spec = spec;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (violated(mid) ? hi : lo) = mid;
    ++res.iterations;
  }
  res.lo = lo;
  res.hi = hi;
  res.rho_star = 0.5 * (lo + hi);
  res.abs_err = std::numeric_limits<double>::quiet_NaN();
  if (const RegistryEntry* e = find_entry(spec)) {
    res.reference = e->radius(spec.params);
    res.abs_err = std::abs(res.rho_star - *res.reference);
    res.label = e->label;
  }
  return res;
}

std::vector<RadiusResult> radius_sweep(const std::vector<FunctionalSpec>& specs, double tol, unsigned threads,
                                       const SolverOptions& opts) {
  std::vector<RadiusResult> out(specs.size());
  parallel_for(specs.size(), threads, [&](std::size_t i) { out[i] = critical_radius(specs[i], tol, opts); });
  return out;
}

double sharpest_K(const FunctionalSpec& spec, double tol, const SolverOptions& opts) {
  if (spec.variant != Variant::HImprovedArea_T3 && spec.variant != Variant::FImprovedArea_T4) {
    throw std::invalid_argument("sharpest_K applies to the shifted-disk area variants");
  }
  if (!(tol > 0.0)) throw std::domain_error("tol must be positive");
  FunctionalSpec s = spec;
  s.params.K.reset();
  s.validate();
  const double rho0 = 1.0 / (2.0 * s.params.k + 3.0);
  // lhs - 1 = (1-a)^2 (K area_hat - deficit_hat) on the extremal family
  const auto exceeds = [&](double K) {
    const auto best = numeric::grid_golden_max(
        [&](double a) { return K * closed_form_area_hat(s, a, rho0) - closed_form_deficit_hat(s, a, rho0); }, 0.0,
        opts.a_cap, opts.a_grid, opts.a_tol);
    return best.value > opts.delta;
  };
  double lo = 0.0;
  double hi = 1.0;
  while (!exceeds(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw std::runtime_error("no finite sharpest K");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (exceeds(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::optional<Witness> violation_witness(const FunctionalSpec& spec, double rho, const SolverOptions& opts) {
  const auto best = sup_over_family(spec, rho, opts);
  if (best.value > 1.0) return Witness{best.x, best.value};
  return std::nullopt;
}

double extremal_sharp_constant_h(double k) {
  return 2.0 * (k + 1.0) * std::pow(k + 2.0, 3) / ((2.0 * k + 3.0) * (2.0 * k + 3.0));
}

std::vector<T4Row> t4_constant_report(const std::vector<double>& gammas, const std::vector<double>& ks, double tol,
                                      AreaScaling scaling) {
  std::vector<T4Row> rows;
  for (double gamma : gammas) {
    for (double k : ks) {
      FunctionalSpec spec{Variant::FImprovedArea_T4, {}};
      spec.params.gamma = gamma;
      spec.params.k = k;
      spec.params.area_scaling = scaling;
      T4Row row;
      row.gamma = gamma;
      row.k = k;
      row.K_star = sharpest_K(spec, tol);
      const double g = scaling == AreaScaling::GammaRescaled ? (1.0 - gamma) * (1.0 - gamma) : 1.0;
      row.K_star_formula = extremal_sharp_constant_h(k) * g / (1.0 - k * k);
      row.statement = t4_constant_statement(k);
      row.proof = t4_constant_proof(k);
      row.statement_admissible = row.statement <= row.K_star;
      row.proof_admissible = row.proof <= row.K_star;
      row.statement_sharp = std::abs(row.statement - row.K_star) <= 1e-3;
      row.proof_sharp = std::abs(row.proof - row.K_star) <= 1e-3;
      row.verdict = row.statement_sharp ? (row.proof_sharp ? "both" : "statement")
                                        : (row.proof_sharp ? "proof" : "neither");
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace bohrlab
