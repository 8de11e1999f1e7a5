#include "bohrlab/extremal.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bohrlab {

namespace {

struct FnInfo {
  ProofFn fn;
  std::string_view name;
};

constexpr std::array<FnInfo, 14> kFns{{
    {ProofFn::XiT1, "xi_T1"},
    {ProofFn::XiT1D1, "xi_T1_d1"},
    {ProofFn::XiT1D2, "xi_T1_d2"},
    {ProofFn::XiT1D3, "xi_T1_d3"},
    {ProofFn::F1, "F1"},
    {ProofFn::F2, "F2"},
    {ProofFn::W, "W"},
    {ProofFn::F3, "F3"},
    {ProofFn::XiT2, "xi_T2"},
    {ProofFn::XiT3, "xi_T3"},
    {ProofFn::FxT3, "Fx_T3"},
    {ProofFn::PhiT4, "Phi_T4"},
    {ProofFn::FxT4, "Fx_T4"},
    {ProofFn::F4, "F4"},
}};

double sq(double x) { return x * x; }

void check_unit(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    throw std::domain_error(std::string(what) + " must lie in [0, 1]");
  }
}

void check_domain(const ProofParams& p) {
  check_unit(p.a, "a");
  require_rho(p.rho);
  require_gamma(p.gamma);
  check_unit(p.k, "k");
  check_unit(p.x, "x");
  if (p.K && !std::isfinite(*p.K)) throw std::domain_error("K must be finite");
}

// Quantities of psi_a(gamma + (1-gamma) z) about 0: |alpha_0|, the deficit
// ratio R = (1-|alpha_0|)/(1-a), alpha_n = -c u^(n-1) and chat = c/(1-a).
struct Background {
  double abs0;
  double R;
  double c;
  double chat;
  double u;
};

Background background(double gamma, double a) {
  const double den = 1.0 - a * gamma;
  Background b{};
  b.abs0 = std::abs((a - gamma) / den);
  b.R = a >= gamma ? (1.0 + gamma) / den : (1.0 + a) * (1.0 - gamma) / (den * (1.0 - a));
  b.c = (1.0 - gamma) * (1.0 - a * a) / sq(den);
  b.chat = (1.0 - gamma) * (1.0 + a) / sq(den);
  b.u = a * (1.0 - gamma) / den;
  return b;
}

double area_scale(const FunctionalSpec& spec) {
  return spec.area_scaling() == AreaScaling::GammaRescaled ? 1.0 / sq(1.0 - spec.params.gamma) : 1.0;
}

// Effective multiplier of (1-a^2)^2 rho^2/(1-a^2 rho^2)^2 for T2..T4.
double effective_area_constant(const FunctionalSpec& spec) {
  const double k = spec.params.k;
  switch (spec.variant) {
    case Variant::HImprovedArea_T3:
      return spec.area_constant() * area_scale(spec);
    case Variant::FImprovedArea_T4:
      return spec.area_constant() * (1.0 - k * k) * area_scale(spec);
    default:
      return 0.0;
  }
}

// Power-term sum  lead * rho/(1-gamma)^(m-1) / (1 - u^m rho/(1-gamma)^(m-1)), times tau.
double power_sum(double gamma, int m, double u, double rho, double lead, double tau) {
  if (tau == 0.0 || lead == 0.0 || rho == 0.0) return 0.0;
  const double g = std::pow(1.0 - gamma, m - 1);
  const double y = std::pow(u, m) * rho / g;
  if (y >= 1.0) return std::copysign(std::numeric_limits<double>::infinity(), tau);
  return tau * lead * rho / g / (1.0 - y);
}

void check_inputs(const FunctionalSpec& spec, double a, double rho) {
  spec.validate();
  check_unit(a, "a");
  require_rho(rho);
}

double background_lhs(const FunctionalSpec& spec, double a, double rho) {
  const double gamma = spec.params.gamma;
  const Background b = background(gamma, a);
  const double maj = b.abs0 + b.c * rho / (1.0 - b.u * rho);
  const double s = rho * (1.0 - gamma);
  const double area = sq(b.c * s) / sq(1.0 - sq(b.u * s));
  switch (spec.variant) {
    case Variant::Classical_B:
      return maj;
    case Variant::ImprovedArea_C:
      return maj + spec.area_constant() * area;
    case Variant::Refined_D:
      return maj + (1.0 / (1.0 + b.abs0) + rho / (1.0 - rho)) * sq(b.c * rho) / (1.0 - sq(b.u * rho));
    case Variant::Harmonic_F:
      return b.abs0 + (1.0 + spec.params.k) * b.c * rho / (1.0 - b.u * rho);
    case Variant::PowerM_G: {
      const int m = spec.params.m;
      return maj + power_sum(gamma, m, b.u, rho, std::pow(b.c, m), power_tau(gamma, m));
    }
    case Variant::QuadArea_H: {
      const double lambda = *spec.params.lambda;
      return maj + (8.0 / 9.0 - 27.0 * lambda / 64.0) * area + lambda * sq(area);
    }
    case Variant::RefinedShift_J:
      return b.c * rho / (1.0 - b.u * rho) +
             (1.0 / (1.0 + b.c) + rho / (1.0 - rho)) * sq(b.c * b.u * rho) / (1.0 - sq(b.u * rho));
    default:
      throw std::logic_error("unreachable");
  }
}

double background_excess(const FunctionalSpec& spec, double a, double rho) {
  const double gamma = spec.params.gamma;
  const Background b = background(gamma, a);
  const double base = -b.R + b.chat * rho / (1.0 - b.u * rho);
  const double s = rho * (1.0 - gamma);
  const double area_over = b.chat * b.c * sq(s) / sq(1.0 - sq(b.u * s));  // area / (1-a)
  switch (spec.variant) {
    case Variant::Classical_B:
      return base;
    case Variant::ImprovedArea_C:
      return base + spec.area_constant() * area_over;
    case Variant::Refined_D:
      return base + (1.0 / (1.0 + b.abs0) + rho / (1.0 - rho)) * b.chat * b.c * sq(rho) /
                        (1.0 - sq(b.u * rho));
    case Variant::Harmonic_F:
      return -b.R + (1.0 + spec.params.k) * b.chat * rho / (1.0 - b.u * rho);
    case Variant::PowerM_G: {
      const int m = spec.params.m;
      return base + power_sum(gamma, m, b.u, rho, b.chat * std::pow(b.c, m - 1), power_tau(gamma, m));
    }
    case Variant::QuadArea_H: {
      const double lambda = *spec.params.lambda;
      const double area = sq(b.c * s) / sq(1.0 - sq(b.u * s));
      return base + (8.0 / 9.0 - 27.0 * lambda / 64.0) * area_over + lambda * area_over * area;
    }
    case Variant::RefinedShift_J:
      if (a >= 1.0) return -std::numeric_limits<double>::infinity();
      return (background_lhs(spec, a, rho) - 1.0) / (1.0 - a);
    default:
      throw std::logic_error("unreachable");
  }
}

double f1(double a, double rho) {
  return 1.0 - a * rho - (1.0 + a) * rho -
         (1.0 / (1.0 + a) + rho / (1.0 - rho)) * (1.0 - a * a) * (1.0 + a) * sq(rho) / (1.0 + a * rho);
}

double f3_like(double a, double rho, double k, double K_eff) {
  return (1.0 + a) * (1.0 + k) * rho / (1.0 - a * rho) +
         K_eff * (1.0 - a) * sq(1.0 + a) * sq(rho) / sq(1.0 - sq(a * rho)) - 1.0;
}

}  // namespace

std::string_view proof_fn_name(ProofFn fn) noexcept {
  for (const auto& i : kFns) {
    if (i.fn == fn) return i.name;
  }
  return "?";
}

std::optional<ProofFn> parse_proof_fn(std::string_view name) noexcept {
  for (const auto& i : kFns) {
    if (i.name == name) return i.fn;
  }
  return std::nullopt;
}

double eval_proof_fn(ProofFn fn, const ProofParams& p) {
  check_domain(p);
  const double a = p.a;
  const double r = p.rho;
  const double k = p.k;
  const double A = r / (1.0 - r);
  const double B = sq(r) / (1.0 - sq(r));
  const double C = r * r * r / ((1.0 - r) * (1.0 - sq(r)));
  const double g2 = sq(1.0 - p.gamma);
  const double ratio = sq(2.0 * k + 3.0) / (sq(2.0 * k + 4.0) * sq(2.0 * k + 2.0));
  switch (fn) {
    case ProofFn::XiT1:
      return A * (1.0 - a * a) + B * (1.0 - a * a) * (1.0 - a) + C * sq(1.0 - a * a) - (1.0 - a);
    case ProofFn::XiT1D1:
      return 1.0 - 2.0 * a * A + B * (3.0 * a * a - 2.0 * a - 1.0) - 4.0 * C * (a - a * a * a);
    case ProofFn::XiT1D2:
      return -2.0 * A + B * (6.0 * a - 2.0) - 4.0 * C * (1.0 - 3.0 * a * a);
    case ProofFn::XiT1D3:
      return 6.0 * B + 24.0 * a * C;
    case ProofFn::F1:
      return f1(a, r);
    case ProofFn::F2:
      return (1.0 - a) * (1.0 - r * (a + (1.0 + a) * (1.0 + k)));
    case ProofFn::W:
      return 1.0 - r * (a + (1.0 + a) * (1.0 + k));
    case ProofFn::F3:
      return f3_like(a, r, k, p.K.value_or(t3_constant_proof_form(k)));
    case ProofFn::XiT2:
      return (1.0 + k) * (1.0 - a * a) * A - (1.0 - a);
    case ProofFn::XiT3:
      return (1.0 + k) * (1.0 - a * a) * A + p.K.value_or(t3_constant(k)) * sq(1.0 - a * a) * sq(r) / sq(1.0 - sq(r)) -
             (1.0 - a);
    case ProofFn::FxT3:
      return 1.0 + 2.0 * p.K.value_or(t3_constant(k)) * ratio * (1.0 - sq(p.x)) - 2.0 / (1.0 + p.x);
    case ProofFn::PhiT4:
      return (1.0 + k) * (1.0 - a * a) * A +
             p.K.value_or(t4_constant_proof(k)) * (1.0 + k) * sq(1.0 - a * a) / g2 * sq(r) / sq(1.0 - sq(r)) -
             (1.0 - a);
    case ProofFn::FxT4:
      return 1.0 + 2.0 * p.K.value_or(t4_constant_proof(k)) * (1.0 + k) * ratio / g2 * (1.0 - sq(p.x)) -
             2.0 / (1.0 + p.x);
    case ProofFn::F4:
      return f3_like(a, r, k, p.K.value_or(t3_constant_proof_form(k)) * (1.0 - k * k) / g2);
  }
  throw std::logic_error("unknown proof function");
}

double closed_form_lhs(const FunctionalSpec& spec, double a, double rho) {
  check_inputs(spec, a, rho);
  if (is_background(spec.variant)) return background_lhs(spec, a, rho);
  const double a2 = a * a;
  const double k = spec.params.k;
  if (spec.variant == Variant::Refined_T1) {
    return a + (1.0 - a2) * rho / (1.0 - a * rho) +
           (1.0 / (1.0 + a) + rho / (1.0 - rho)) * sq(1.0 - a2) * sq(rho) / (1.0 - a2 * sq(rho));
  }
  return a + (1.0 + k) * (1.0 - a2) * rho / (1.0 - a * rho) +
         effective_area_constant(spec) * sq(1.0 - a2) * sq(rho) / sq(1.0 - a2 * sq(rho));
}

double closed_form_excess(const FunctionalSpec& spec, double a, double rho) {
  check_inputs(spec, a, rho);
  if (is_background(spec.variant)) return background_excess(spec, a, rho);
  if (spec.variant == Variant::Refined_T1) return -f1(a, rho) / (1.0 - a * rho);
  return f3_like(a, rho, spec.params.k, effective_area_constant(spec));
}

double closed_form_area_hat(const FunctionalSpec& spec, double a, double rho) {
  check_inputs(spec, a, rho);
  if (spec.variant != Variant::HImprovedArea_T3 && spec.variant != Variant::FImprovedArea_T4) {
    throw std::invalid_argument("area decomposition exists only for the shifted-disk area variants");
  }
  FunctionalSpec unit = spec;
  unit.params.K = 1.0;
  return effective_area_constant(unit) * sq((1.0 + a) * rho) / sq(1.0 - sq(a * rho));
}

double closed_form_deficit_hat(const FunctionalSpec& spec, double a, double rho) {
  check_inputs(spec, a, rho);
  if (spec.variant != Variant::HImprovedArea_T3 && spec.variant != Variant::FImprovedArea_T4) {
    throw std::invalid_argument("area decomposition exists only for the shifted-disk area variants");
  }
  const double k = spec.params.k;
  const double w1 = 1.0 - (2.0 * k + 3.0) * rho;
  if (a >= 1.0) {
    if (w1 == 0.0) return (2.0 + k) * rho / (1.0 - rho);
    return std::copysign(std::numeric_limits<double>::infinity(), w1);
  }
  return (w1 / (1.0 - a) + (2.0 + k) * rho) / (1.0 - a * rho);
}

std::string_view axis_name(Axis axis) noexcept {
  switch (axis) {
    case Axis::A:
      return "a";
    case Axis::Rho:
      return "rho";
    case Axis::X:
      return "x";
  }
  return "?";
}

std::string_view claim_name(Claim claim) noexcept {
  switch (claim) {
    case Claim::Increasing:
      return "increasing";
    case Claim::Decreasing:
      return "decreasing";
    case Claim::NonPositive:
      return "nonpositive";
    case Claim::NonNegative:
      return "nonnegative";
  }
  return "?";
}

namespace {

void set_axis(ProofParams& p, Axis axis, double v) {
  switch (axis) {
    case Axis::A:
      p.a = v;
      break;
    case Axis::Rho:
      p.rho = v;
      break;
    case Axis::X:
      p.x = v;
      break;
  }
}

double grid_value(const GridAxis& g, std::size_t i) {
  if (g.points <= 1) return g.lo;
  return g.lo + (g.hi - g.lo) * static_cast<double>(i) / static_cast<double>(g.points - 1);
}

}  // namespace

MonotonicityReport monotonicity_report(const MonotonicityCheck& check) {
  constexpr double kStep = 1e-5;
  constexpr double kMargin = 1e-12;
  MonotonicityReport rep;
  rep.name = std::string(proof_fn_name(check.fn)) + " " + std::string(claim_name(check.claim)) + " in " +
             std::string(axis_name(check.inner.axis));
  rep.min_value = std::numeric_limits<double>::infinity();
  rep.max_value = -std::numeric_limits<double>::infinity();
  const bool wants_max = check.claim == Claim::Decreasing || check.claim == Claim::NonPositive;
  rep.worst_value = wants_max ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();

  const std::size_t n_outer = check.outer ? check.outer->points : 1;
  for (std::size_t j = 0; j < n_outer; ++j) {
    ProofParams p = check.base;
    if (check.outer) set_axis(p, check.outer->axis, grid_value(*check.outer, j));
    for (std::size_t i = 0; i < check.inner.points; ++i) {
      const double v = grid_value(check.inner, i);
      set_axis(p, check.inner.axis, v);
      double checked = 0.0;
      if (check.claim == Claim::NonPositive || check.claim == Claim::NonNegative) {
        checked = eval_proof_fn(check.fn, p);
      } else {
        ProofParams lo = p;
        ProofParams hi = p;
        double lo_v = v - kStep;
        double hi_v = v + kStep;
        if (i == 0) lo_v = v;
        if (i + 1 == check.inner.points) hi_v = v;
        set_axis(lo, check.inner.axis, lo_v);
        set_axis(hi, check.inner.axis, hi_v);
        checked = (eval_proof_fn(check.fn, hi) - eval_proof_fn(check.fn, lo)) / (hi_v - lo_v);
      }
      ++rep.grid;
      rep.min_value = std::min(rep.min_value, checked);
      rep.max_value = std::max(rep.max_value, checked);
      bool ok = true;
      switch (check.claim) {
        case Claim::Increasing:
          ok = checked >= kMargin;
          break;
        case Claim::Decreasing:
          ok = checked <= -kMargin;
          break;
        case Claim::NonPositive:
          ok = checked <= kMargin;
          break;
        case Claim::NonNegative:
          ok = checked >= -kMargin;
          break;
      }
      if (!ok) ++rep.failures;
      if (wants_max ? checked > rep.worst_value : checked < rep.worst_value) {
        rep.worst_value = checked;
        rep.worst_point = p;
      }
    }
  }
  rep.pass = rep.failures == 0;
  return rep;
}

}  // namespace bohrlab
