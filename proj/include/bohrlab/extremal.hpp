#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bohrlab/functionals.hpp"

namespace bohrlab {

/// Closed-form auxiliary functions of the sharpness arguments.
enum class ProofFn {
  XiT1,    ///< A(1-a^2) + B(1-a^2)(1-a) + C(1-a^2)^2 - (1-a), variable a
  XiT1D1,  ///< first derivative in a
  XiT1D2,  ///< second derivative in a
  XiT1D3,  ///< third derivative in a
  F1,      ///< refined-majorant deficit, variable rho
  F2,      ///< (1-a)((1-a rho) - (1+a)(1+k) rho)
  W,       ///< (1-a rho) - (1+a)(1+k) rho
  F3,      ///< h-area excess factor, variable rho
  XiT2,    ///< (1+k)(1-a^2) rho/(1-rho) - (1-a)
  XiT3,    ///< xi_T2 + K(1-a^2)^2 rho^2/(1-rho^2)^2
  FxT3,    ///< 1 + 2K(2k+3)^2 (1-x^2)/((2k+4)^2(2k+2)^2) - 2/(1+x)
  PhiT4,   ///< xi_T2 + K(1+k)(1-a^2)^2 rho^2/((1-gamma)^2 (1-rho^2)^2)
  FxT4,    ///< 1 + 2K(1+k)(2k+3)^2 (1-x^2)/((1-gamma)^2 (2k+4)^2(2k+2)^2) - 2/(1+x)
  F4,      ///< f-area excess factor, variable rho; K defaults to the proof-form h-area constant
};

[[nodiscard]] std::string_view proof_fn_name(ProofFn fn) noexcept;
[[nodiscard]] std::optional<ProofFn> parse_proof_fn(std::string_view name) noexcept;

struct ProofParams {
  double a = 0.0;
  double rho = 0.0;
  double gamma = 0.0;
  double k = 0.0;
  std::optional<double> K;  ///< defaults to the proof-form constant for k
  double x = 0.0;           ///< variable of FxT3 / FxT4
};

/// Exact evaluation. Throws std::domain_error outside the domain, including
/// rho >= 1.
[[nodiscard]] double eval_proof_fn(ProofFn fn, const ProofParams& p);

/// lhs of the variant on the extremal family with parameter a, by closed form.
[[nodiscard]] double closed_form_lhs(const FunctionalSpec& spec, double a, double rho);

/// (lhs - 1)/(1 - a), evaluated in factored form so that it stays accurate as
/// a -> 1. Its sign is the sign of lhs - 1.
[[nodiscard]] double closed_form_excess(const FunctionalSpec& spec, double a, double rho);

/// For the area variants T3/T4, lhs = base(a) + K * (1-a)^2 * area_hat(a).
/// Returns area_hat (K = 1, area scaling applied).
[[nodiscard]] double closed_form_area_hat(const FunctionalSpec& spec, double a, double rho);
/// (1 - base(a)) / (1-a)^2 for the area variants, in factored form.
[[nodiscard]] double closed_form_deficit_hat(const FunctionalSpec& spec, double a, double rho);

enum class Axis { A, Rho, X };
enum class Claim { Increasing, Decreasing, NonPositive, NonNegative };

[[nodiscard]] std::string_view axis_name(Axis axis) noexcept;
[[nodiscard]] std::string_view claim_name(Claim claim) noexcept;

struct GridAxis {
  Axis axis = Axis::A;
  double lo = 0.0;
  double hi = 1.0;
  std::size_t points = 101;
};

struct MonotonicityCheck {
  ProofFn fn = ProofFn::F1;
  ProofParams base;
  GridAxis inner;                ///< axis along which the claim is made
  std::optional<GridAxis> outer;  ///< optional second parameter sweep
  Claim claim = Claim::Decreasing;
};

struct MonotonicityReport {
  std::string name;
  std::size_t grid = 0;  ///< number of points checked
  bool pass = true;
  std::size_t failures = 0;
  ProofParams worst_point;
  double worst_value = 0.0;  ///< most adverse checked value
  double min_value = 0.0;
  double max_value = 0.0;
};

/// Strict claims need a finite-difference margin of 1e-12; sign claims allow
/// 1e-12 of slack. Central differences with h = 1e-5, one-sided at the ends.
[[nodiscard]] MonotonicityReport monotonicity_report(const MonotonicityCheck& check);

}  // namespace bohrlab
