#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bohrlab/series.hpp"

namespace bohrlab {

/// Bohr-type inequality variants. The *_B .. *_J variants act on expansions
/// about 0 (restriction to the unit disk); the *_T1 .. *_T4 variants act on
/// expansions about the center of the shifted disk with normalized radius
/// rho = |gamma + (1-gamma) z|.
enum class Variant {
  Classical_B,
  ImprovedArea_C,
  Refined_D,
  Harmonic_F,
  PowerM_G,
  QuadArea_H,
  RefinedShift_J,
  Refined_T1,
  Harmonic_T2,
  HImprovedArea_T3,
  FImprovedArea_T4,
};

[[nodiscard]] std::string_view variant_name(Variant v) noexcept;
/// Short code used on the command line: B, C, D, F, G, H, J, T1 .. T4.
[[nodiscard]] std::string_view variant_code(Variant v) noexcept;
/// Accepts either the short code or the full name.
[[nodiscard]] std::optional<Variant> parse_variant(std::string_view text) noexcept;
[[nodiscard]] bool is_background(Variant v) noexcept;
[[nodiscard]] bool uses_dilatation(Variant v) noexcept;

/// Candidate area constants for the f-area inequality.
enum class T4Constant {
  Statement,     ///< 2(k+2)^2(k+1) / ((1-k)(2k+3)^2)
  ProofDerived,  ///< (2k+4)^2(2k+2)^2 / (8(1+k)(2k+3)^2)
};

struct Params {
  double gamma = 0.0;
  double k = 0.0;
  int m = 2;
  std::optional<double> lambda;
  std::optional<double> K;  ///< area multiplier override
  T4Constant t4_constant = T4Constant::Statement;
  std::optional<AreaScaling> area_scaling;  ///< T3 default Unscaled, T4 default GammaRescaled
};

struct FunctionalSpec {
  Variant variant = Variant::Classical_B;
  Params params;

  /// Throws std::domain_error / std::invalid_argument on bad parameters.
  void validate() const;
  /// Area multiplier in effect (override or the variant default). 0 when the
  /// variant has no area term.
  [[nodiscard]] double area_constant() const;
  [[nodiscard]] AreaScaling area_scaling() const;
};

[[nodiscard]] double t3_constant(double k);
[[nodiscard]] double t3_constant_proof_form(double k);
[[nodiscard]] double t4_constant_statement(double k);
[[nodiscard]] double t4_constant_proof(double k);
/// tau = ((1-gamma)^m (3+gamma) - (1-gamma^2)) / (8(m-1)).
[[nodiscard]] double power_tau(double gamma, int m);

struct Component {
  std::string label;
  double value = 0.0;
};

struct EvalResult {
  double lhs = 0.0;
  double tail = 0.0;    ///< certified bound on the truncated remainder of lhs
  double margin = 0.0;  ///< 1 - lhs
  std::vector<Component> components;
  bool certified = true;
};

/// Pass criterion: margin >= -(tail + slack).
[[nodiscard]] inline bool holds(const EvalResult& r, double slack = 1e-12) {
  return r.margin >= -(r.tail + slack);
}

[[nodiscard]] EvalResult eval_refined_T1(const CoeffSeries& s, double rho);
[[nodiscard]] EvalResult eval_harmonic_T2(const HarmonicPair& p, double rho);
[[nodiscard]] EvalResult eval_h_area_T3(const HarmonicPair& p, double rho,
                                        std::optional<double> K_override = std::nullopt,
                                        AreaScaling scaling = AreaScaling::Unscaled);
[[nodiscard]] EvalResult eval_f_area_T4(const HarmonicPair& p, double rho,
                                        std::optional<double> K_override = std::nullopt,
                                        T4Constant constant = T4Constant::Statement,
                                        AreaScaling scaling = AreaScaling::GammaRescaled);

/// Dispatches the shifted-disk variants. T1 reads only p.h().
[[nodiscard]] EvalResult evaluate(const FunctionalSpec& spec, const HarmonicPair& p, double rho);

struct BackgroundInput {
  DiskSeries f;
  std::optional<DiskSeries> g;  ///< co-analytic part, Harmonic_F only
};

[[nodiscard]] EvalResult eval_background(const FunctionalSpec& spec, const BackgroundInput& input,
                                         double rho);

}  // namespace bohrlab
