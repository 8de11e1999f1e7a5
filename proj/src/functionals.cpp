#include "bohrlab/functionals.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace bohrlab {

namespace {

struct VariantInfo {
  Variant variant;
  std::string_view name;
  std::string_view code;
};

constexpr std::array<VariantInfo, 11> kVariants{{
    {Variant::Classical_B, "Classical_B", "B"},
    {Variant::ImprovedArea_C, "ImprovedArea_C", "C"},
    {Variant::Refined_D, "Refined_D", "D"},
    {Variant::Harmonic_F, "Harmonic_F", "F"},
    {Variant::PowerM_G, "PowerM_G", "G"},
    {Variant::QuadArea_H, "QuadArea_H", "H"},
    {Variant::RefinedShift_J, "RefinedShift_J", "J"},
    {Variant::Refined_T1, "Refined_T1", "T1"},
    {Variant::Harmonic_T2, "Harmonic_T2", "T2"},
    {Variant::HImprovedArea_T3, "HImprovedArea_T3", "T3"},
    {Variant::FImprovedArea_T4, "FImprovedArea_T4", "T4"},
}};

const VariantInfo& info(Variant v) {
  for (const auto& i : kVariants) {
    if (i.variant == v) return i;
  }
  throw std::logic_error("unknown variant");
}

double sq(double x) { return x * x; }

EvalResult assemble(std::vector<Component> parts, double tail, bool certified) {
  EvalResult r;
  for (const auto& c : parts) r.lhs += c.value;
  r.components = std::move(parts);
  r.tail = tail;
  r.margin = 1.0 - r.lhs;
  r.certified = certified;
  return r;
}

void require_admissible(const CoeffSeries& s) {
  if (s.mode() == TailMode::SchwarzPick) return;
  const auto rep = check_coefficient_bound(s);
  if (!rep.pass) {
    throw SchwarzPickViolation(rep.worst_index, std::abs(s.coeffs()[rep.worst_index]), s.budget());
  }
}

// Plain sums over a unit-disk expansion with envelope tails.
struct DiskSums {
  const DiskSeries& s;
  std::size_t N() const { return s.truncation(); }
  bool certified() const { return s.envelope().has_value(); }

  Estimate linear(double rho, std::size_t from = 0) const {
    const auto c = s.coeffs();
    double v = 0.0;
    for (std::size_t n = from; n < c.size(); ++n) v += std::abs(c[n]) * std::pow(rho, static_cast<double>(n));
    return {v, certified() ? envelope_tail::linear(*s.envelope(), rho, N()) : 0.0, certified()};
  }
  Estimate quadratic(double rho) const {
    const auto c = s.coeffs();
    double v = 0.0;
    for (std::size_t n = 1; n < c.size(); ++n) v += std::norm(c[n]) * std::pow(rho, 2.0 * static_cast<double>(n));
    return {v, certified() ? envelope_tail::quadratic(*s.envelope(), rho, N()) : 0.0, certified()};
  }
  Estimate area(double r) const {
    const auto c = s.coeffs();
    double v = 0.0;
    for (std::size_t n = 1; n < c.size(); ++n) {
      v += static_cast<double>(n) * std::norm(c[n]) * std::pow(r, 2.0 * static_cast<double>(n));
    }
    return {v, certified() ? envelope_tail::area(*s.envelope(), r, N()) : 0.0, certified()};
  }
};

}  // namespace

std::string_view variant_name(Variant v) noexcept { return info(v).name; }
std::string_view variant_code(Variant v) noexcept { return info(v).code; }

std::optional<Variant> parse_variant(std::string_view text) noexcept {
  for (const auto& i : kVariants) {
    if (text == i.name || text == i.code) return i.variant;
  }
  return std::nullopt;
}

bool is_background(Variant v) noexcept {
  switch (v) {
    case Variant::Refined_T1:
    case Variant::Harmonic_T2:
    case Variant::HImprovedArea_T3:
    case Variant::FImprovedArea_T4:
      return false;
    default:
      return true;
  }
}

bool uses_dilatation(Variant v) noexcept {
  return v == Variant::Harmonic_F || v == Variant::Harmonic_T2 || v == Variant::HImprovedArea_T3 ||
         v == Variant::FImprovedArea_T4;
}

double t3_constant(double k) { return 2.0 * sq(k + 2.0) * sq(k + 1.0) / sq(2.0 * k + 3.0); }

double t3_constant_proof_form(double k) {
  return sq(2.0 * k + 4.0) * sq(2.0 * k + 2.0) / (8.0 * sq(2.0 * k + 3.0));
}

double t4_constant_statement(double k) {
  if (k >= 1.0) throw std::domain_error("the stated f-area constant diverges at k = 1");
  return 2.0 * sq(k + 2.0) * (k + 1.0) / ((1.0 - k) * sq(2.0 * k + 3.0));
}

double t4_constant_proof(double k) {
  return sq(2.0 * k + 4.0) * sq(2.0 * k + 2.0) / (8.0 * (1.0 + k) * sq(2.0 * k + 3.0));
}

double power_tau(double gamma, int m) {
  if (m < 2) throw std::domain_error("m must be >= 2");
  return (std::pow(1.0 - gamma, m) * (3.0 + gamma) - (1.0 - gamma * gamma)) / (8.0 * (m - 1));
}

void FunctionalSpec::validate() const {
  require_gamma(params.gamma);
  const double k = params.k;
  if (!std::isfinite(k) || k < 0.0 || k > 1.0) throw std::domain_error("k must lie in [0, 1]");
  if (variant == Variant::FImprovedArea_T4 && k >= 1.0) {
    throw std::domain_error("the f-area variant requires k < 1");
  }
  if (variant == Variant::PowerM_G && params.m < 2) throw std::domain_error("m must be >= 2");
  if (variant == Variant::QuadArea_H && !params.lambda) {
    throw std::invalid_argument("lambda unspecified");
  }
  if (params.lambda && !std::isfinite(*params.lambda)) throw std::invalid_argument("lambda must be finite");
  if (params.K && (!std::isfinite(*params.K) || *params.K < 0.0)) {
    throw std::domain_error("K must be a finite non-negative number");
  }
}

double FunctionalSpec::area_constant() const {
  if (params.K) return *params.K;
  switch (variant) {
    case Variant::ImprovedArea_C:
      return 8.0 / 9.0;
    case Variant::QuadArea_H:
      return 8.0 / 9.0 - 27.0 * params.lambda.value_or(0.0) / 64.0;
    case Variant::HImprovedArea_T3:
      return t3_constant(params.k);
    case Variant::FImprovedArea_T4:
      return params.t4_constant == T4Constant::Statement ? t4_constant_statement(params.k)
                                                          : t4_constant_proof(params.k);
    default:
      return 0.0;
  }
}

AreaScaling FunctionalSpec::area_scaling() const {
  if (params.area_scaling) return *params.area_scaling;
  return variant == Variant::FImprovedArea_T4 ? AreaScaling::GammaRescaled : AreaScaling::Unscaled;
}

EvalResult eval_refined_T1(const CoeffSeries& s, double rho) {
  require_rho(rho);
  require_admissible(s);
  const Estimate maj = majorant(s, rho);
  const Estimate quad = quadratic_sum(s, rho);
  const double weight = 1.0 / (1.0 + std::abs(s.coeffs().front())) + rho / (1.0 - rho);
  return assemble({{"majorant", maj.value}, {"refinement", weight * quad.value}},
                  maj.tail + weight * quad.tail, maj.certified && quad.certified);
}

EvalResult eval_harmonic_T2(const HarmonicPair& p, double rho) {
  require_rho(rho);
  require_admissible(p.h());
  const Estimate maj = majorant(p.h(), rho);
  const Estimate co = coanalytic_majorant(p, rho);
  return assemble({{"majorant", maj.value}, {"coanalytic", co.value}}, maj.tail + co.tail,
                  maj.certified && co.certified);
}

EvalResult eval_h_area_T3(const HarmonicPair& p, double rho, std::optional<double> K_override,
                          AreaScaling scaling) {
  EvalResult base = eval_harmonic_T2(p, rho);
  const double K = K_override.value_or(t3_constant(p.k()));
  Estimate area = area_analytic(p.h(), rho);
  if (scaling == AreaScaling::GammaRescaled) {
    const double f = 1.0 / sq(1.0 - p.gamma());
    area.value *= f;
    area.tail *= f;
  }
  auto parts = std::move(base.components);
  parts.push_back({"area", K * area.value});
  return assemble(std::move(parts), base.tail + K * area.tail, base.certified && area.certified);
}

EvalResult eval_f_area_T4(const HarmonicPair& p, double rho, std::optional<double> K_override,
                          T4Constant constant, AreaScaling scaling) {
  if (p.k() >= 1.0) throw std::domain_error("the f-area variant requires k < 1");
  EvalResult base = eval_harmonic_T2(p, rho);
  const double K = K_override.value_or(constant == T4Constant::Statement ? t4_constant_statement(p.k())
                                                                         : t4_constant_proof(p.k()));
  const Estimate area = area_harmonic(p, rho, scaling);
  auto parts = std::move(base.components);
  parts.push_back({"area", K * area.value});
  return assemble(std::move(parts), base.tail + K * area.tail, base.certified && area.certified);
}

EvalResult evaluate(const FunctionalSpec& spec, const HarmonicPair& p, double rho) {
  spec.validate();
  if (std::abs(p.k() - spec.params.k) > 0.0 && uses_dilatation(spec.variant)) {
    throw std::invalid_argument("pair dilatation bound differs from spec k");
  }
  switch (spec.variant) {
    case Variant::Refined_T1:
      return eval_refined_T1(p.h(), rho);
    case Variant::Harmonic_T2:
      return eval_harmonic_T2(p, rho);
    case Variant::HImprovedArea_T3:
      return eval_h_area_T3(p, rho, spec.area_constant(), spec.area_scaling());
    case Variant::FImprovedArea_T4:
      return eval_f_area_T4(p, rho, spec.area_constant(), spec.params.t4_constant, spec.area_scaling());
    default:
      throw std::invalid_argument("variant acts on unit-disk expansions; use eval_background");
  }
}

EvalResult eval_background(const FunctionalSpec& spec, const BackgroundInput& input, double rho) {
  spec.validate();
  require_rho(rho);
  if (!is_background(spec.variant)) {
    throw std::invalid_argument("variant acts on shifted-disk expansions; use evaluate");
  }
  const double gamma = spec.params.gamma;
  if (input.f.gamma() != gamma) throw std::invalid_argument("input gamma differs from spec gamma");
  const DiskSums f{input.f};
  const auto c = input.f.coeffs();
  const double a0 = std::abs(c[0]);
  const bool cert = f.certified();

  switch (spec.variant) {
    case Variant::Classical_B: {
      const Estimate m = f.linear(rho);
      return assemble({{"majorant", m.value}}, m.tail, cert);
    }
    case Variant::ImprovedArea_C: {
      const Estimate m = f.linear(rho);
      const Estimate s = f.area(rho * (1.0 - gamma));
      const double K = spec.area_constant();
      return assemble({{"majorant", m.value}, {"area", K * s.value}}, m.tail + K * s.tail, cert);
    }
    case Variant::Refined_D: {
      const Estimate m = f.linear(rho);
      const Estimate q = f.quadratic(rho);
      const double w = 1.0 / (1.0 + a0) + rho / (1.0 - rho);
      return assemble({{"majorant", m.value}, {"refinement", w * q.value}}, m.tail + w * q.tail, cert);
    }
    case Variant::Harmonic_F: {
      if (!input.g) throw std::invalid_argument("Harmonic_F needs a co-analytic part g");
      if (input.g->coeffs()[0] != cplx{0.0}) throw std::invalid_argument("g must vanish at 0");
      const DiskSums g{*input.g};
      const Estimate m = f.linear(rho);
      const Estimate mg = g.linear(rho);
      return assemble({{"majorant", m.value}, {"coanalytic", mg.value}}, m.tail + mg.tail,
                      cert && g.certified());
    }
    case Variant::PowerM_G: {
      const int m = spec.params.m;
      const double tau = power_tau(gamma, m);
      const Estimate maj = f.linear(rho);
      double power = 0.0;
      for (std::size_t n = 1; n < c.size(); ++n) {
        const double nn = static_cast<double>(n);
        power += std::pow(std::abs(c[n]), m) / std::pow(1.0 - gamma, (m - 1) * nn) * std::pow(rho, nn);
      }
      double power_tail = 0.0;
      if (const auto& env = input.f.envelope()) {
        const double y = std::pow(env->ratio, m) * rho / std::pow(1.0 - gamma, m - 1);
        power_tail = y >= 1.0 ? std::numeric_limits<double>::infinity()
                              : std::pow(env->scale, m) * rho / std::pow(1.0 - gamma, m - 1) *
                                    std::pow(y, static_cast<double>(f.N())) / (1.0 - y);
      }
      return assemble({{"majorant", maj.value}, {"power", tau * power}},
                      maj.tail + std::abs(tau) * power_tail, cert);
    }
    case Variant::QuadArea_H: {
      const double lambda = *spec.params.lambda;
      const double K1 = 8.0 / 9.0 - 27.0 * lambda / 64.0;
      const Estimate m = f.linear(rho);
      const Estimate s = f.area(rho * (1.0 - gamma));
      const double tail = m.tail + std::abs(K1) * s.tail + std::abs(lambda) * (2.0 * s.value * s.tail + sq(s.tail));
      return assemble({{"majorant", m.value}, {"area", K1 * s.value}, {"area_squared", lambda * sq(s.value)}},
                      tail, cert);
    }
    case Variant::RefinedShift_J: {
      const Estimate m = f.linear(rho, 1);
      double q = 0.0;
      for (std::size_t n = 2; n < c.size(); ++n) q += std::norm(c[n]) * std::pow(rho, 2.0 * (static_cast<double>(n) - 1.0));
      double q_tail = 0.0;
      if (cert && rho > 0.0) q_tail = envelope_tail::quadratic(*input.f.envelope(), rho, f.N()) / sq(rho);
      const double w = 1.0 / (1.0 + std::abs(c[1])) + rho / (1.0 - rho);
      return assemble({{"majorant", m.value}, {"refinement", w * q}}, m.tail + w * q_tail, cert);
    }
    default:
      throw std::logic_error("unreachable");
  }
}

}  // namespace bohrlab
