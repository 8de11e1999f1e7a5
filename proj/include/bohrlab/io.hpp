#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bohrlab/extremal.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/series.hpp"
#include "bohrlab/solver.hpp"

namespace bohrlab::io {

using nlohmann::json;

/// 17 significant digits, '.' decimal, "nan"/"inf"/"-inf" for non-finite values.
[[nodiscard]] std::string format_double(double v);

// -- series ---------------------------------------------------------------
// {"gamma": g, "mode": "schwarz_pick"|"zero", "coeffs": [[re, im], ...]}
// The coefficients are the unit-disk-normalized d_n.
[[nodiscard]] json to_json(const CoeffSeries& s);
[[nodiscard]] CoeffSeries series_from_json(const json& j);
// {"h": series, "g": series, "k": k}
[[nodiscard]] json to_json(const HarmonicPair& p);
[[nodiscard]] HarmonicPair pair_from_json(const json& j);

// -- functionals ----------------------------------------------------------
[[nodiscard]] json to_json(const Params& p);
/// {variant, params, rho, lhs, tail, margin, components: {label: value}}
[[nodiscard]] json to_json(const FunctionalSpec& spec, double rho, const EvalResult& r);

// -- extremal -------------------------------------------------------------
[[nodiscard]] json to_json(const ProofParams& p);
/// {name, grid, pass, worst_point, worst_value}
[[nodiscard]] json to_json(const MonotonicityReport& r);

// -- solver ---------------------------------------------------------------
[[nodiscard]] json to_json(const RadiusResult& r);
[[nodiscard]] json to_json(const T4Row& r);

/// Flat table written either as CSV (header row first) or as a JSON array of
/// objects keyed by the header.
struct Table {
  using Cell = std::variant<std::string, double, long long, bool>;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
  void write_csv(std::ostream& os) const;
  [[nodiscard]] json to_json() const;
};

/// Columns: variant, gamma, k, rho_star, reference, abs_err, iterations.
[[nodiscard]] Table radius_table(const std::vector<RadiusResult>& results);

}  // namespace bohrlab::io
