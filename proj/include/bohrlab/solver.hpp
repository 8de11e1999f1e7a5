#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bohrlab/extremal.hpp"
#include "bohrlab/numeric.hpp"

namespace bohrlab {

/// Closed-form sharp radius of one inequality. `applies` restricts the
/// parameter region where the formula is claimed; `confirmed` is false when
/// the numerics contradict the claim.
struct RegistryEntry {
  std::string label;
  Variant variant;
  std::function<bool(const Params&)> applies;
  std::function<double(const Params&)> radius;
  std::optional<std::function<double(double k)>> constant;
  bool confirmed = true;
  std::string note;
};

[[nodiscard]] const std::vector<RegistryEntry>& registry();
/// Most specific applicable entry (corollaries before general formulas).
[[nodiscard]] const RegistryEntry* find_entry(const FunctionalSpec& spec);

struct SolverOptions {
  double a_cap = 1.0 - 1e-8;
  std::size_t a_grid = 129;
  double a_tol = 1e-12;
  double delta = 1e-9;
};

/// sup over a in [0, a_cap] of closed_form_lhs; x is the maximizing a.
[[nodiscard]] numeric::Extremum sup_over_family(const FunctionalSpec& spec, double rho,
                                                const SolverOptions& opts = {});
/// sup over a of (lhs - 1)/(1 - a). Positive exactly when sup lhs > 1.
[[nodiscard]] numeric::Extremum sup_excess(const FunctionalSpec& spec, double rho,
                                           const SolverOptions& opts = {});

class BracketFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RadiusResult {
  FunctionalSpec spec;
  double rho_star = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  std::optional<double> reference;
  double abs_err = 0.0;  ///< |rho_star - reference|, NaN without a reference
  std::string label;     ///< registry label, empty without an entry
};

inline constexpr double kRadiusBracketLo = 0.01;
inline constexpr double kRadiusBracketHi = 0.99;

/// Bisection on "sup excess > delta" over [0.01, 0.99] until hi - lo <= tol.
/// Throws BracketFailure when the predicate does not change sign.
[[nodiscard]] RadiusResult critical_radius(const FunctionalSpec& spec, double tol = 1e-8,
                                           const SolverOptions& opts = {});

/// critical_radius over many specs in parallel; output order follows input.
[[nodiscard]] std::vector<RadiusResult> radius_sweep(const std::vector<FunctionalSpec>& specs,
                                                     double tol, unsigned threads,
                                                     const SolverOptions& opts = {});

/// Largest area multiplier K keeping sup lhs <= 1 at rho0 = 1/(2k+3) for the
/// area variants T3/T4 (spec.params.K is ignored). Bisection to tol.
[[nodiscard]] double sharpest_K(const FunctionalSpec& spec, double tol = 1e-8, const SolverOptions& opts = {});

struct Witness {
  double a = 0.0;
  double lhs = 0.0;
};

/// An a with lhs > 1 at rho, if the maximizer finds one.
[[nodiscard]] std::optional<Witness> violation_witness(const FunctionalSpec& spec, double rho,
                                                       const SolverOptions& opts = {});

/// One cell of the f-area constant comparison.
struct T4Row {
  double gamma = 0.0;
  double k = 0.0;
  double K_star = 0.0;          ///< empirical sharpest K
  double K_star_formula = 0.0;  ///< independent closed form of the sharpest K
  double statement = 0.0;
  double proof = 0.0;
  bool statement_admissible = false;  ///< statement <= K_star
  bool proof_admissible = false;
  bool statement_sharp = false;  ///< |statement - K_star| <= 1e-3
  bool proof_sharp = false;
  std::string verdict;  ///< "statement", "proof", "both" or "neither" (sharpness)
};

/// Sharpest K on the extremal family for T3 with the given k:
/// 2(k+1)(k+2)^3/(2k+3)^2.
[[nodiscard]] double extremal_sharp_constant_h(double k);

[[nodiscard]] std::vector<T4Row> t4_constant_report(const std::vector<double>& gammas,
                                                    const std::vector<double>& ks, double tol = 1e-9,
                                                    AreaScaling scaling = AreaScaling::GammaRescaled);

}  // namespace bohrlab
