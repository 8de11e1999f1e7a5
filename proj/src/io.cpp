#include "bohrlab/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace bohrlab::io {

namespace {

json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

json coeffs_json(std::span<const cplx> c) {
  json arr = json::array();
  for (const cplx& z : c) arr.push_back({z.real(), z.imag()});
  return arr;
}

std::string_view mode_name(TailMode m) { return m == TailMode::SchwarzPick ? "schwarz_pick" : "zero"; }

std::string csv_cell(const Table::Cell& c) {
  struct {
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
      }
      return q + "\"";
    }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  } visitor;
  return std::visit(visitor, c);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

json to_json(const CoeffSeries& s) {
  json j{{"gamma", s.gamma()}, {"mode", mode_name(s.mode())}, {"coeffs", coeffs_json(s.coeffs())}};
  if (s.envelope()) j["envelope"] = {{"scale", s.envelope()->scale}, {"ratio", s.envelope()->ratio}};
  return j;
}

CoeffSeries series_from_json(const json& j) {
  const double gamma = j.at("gamma").get<double>();
  const std::string mode = j.value("mode", std::string("schwarz_pick"));
  TailMode m;
  if (mode == "schwarz_pick") {
    m = TailMode::SchwarzPick;
  } else if (mode == "zero") {
    m = TailMode::Zero;
  } else {
    throw std::invalid_argument("unknown series mode: " + mode);
  }
  std::vector<cplx> d;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_number()) {
      d.emplace_back(c.get<double>(), 0.0);
    } else {
      d.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    }
  }
  std::optional<GeometricEnvelope> env;
  if (j.contains("envelope")) env = GeometricEnvelope{j["envelope"].at("scale"), j["envelope"].at("ratio")};
  return CoeffSeries::from_disk_coeffs(gamma, std::move(d), m, env);
}

json to_json(const HarmonicPair& p) { return {{"h", to_json(p.h())}, {"g", to_json(p.g())}, {"k", p.k()}}; }

HarmonicPair pair_from_json(const json& j) {
  return HarmonicPair(series_from_json(j.at("h")), series_from_json(j.at("g")), j.at("k").get<double>());
}

json to_json(const Params& p) {
  json j{{"gamma", p.gamma}, {"k", p.k}, {"m", p.m}};
  j["lambda"] = p.lambda ? json(*p.lambda) : json(nullptr);
  j["K"] = p.K ? json(*p.K) : json(nullptr);
  j["t4_constant"] = p.t4_constant == T4Constant::Statement ? "statement" : "proof";
  if (p.area_scaling) j["area_scaling"] = *p.area_scaling == AreaScaling::Unscaled ? "unscaled" : "gamma_rescaled";
  return j;
}

json to_json(const FunctionalSpec& spec, double rho, const EvalResult& r) {
  json comps = json::object();
  for (const auto& c : r.components) comps[c.label] = number(c.value);
  return {{"variant", variant_code(spec.variant)},
          {"params", to_json(spec.params)},
          {"rho", rho},
          {"lhs", number(r.lhs)},
          {"tail", number(r.tail)},
          {"margin", number(r.margin)},
          {"certified", r.certified},
          {"components", comps}};
}

json to_json(const ProofParams& p) {
  json j{{"a", p.a}, {"rho", p.rho}, {"gamma", p.gamma}, {"k", p.k}, {"x", p.x}};
  j["K"] = p.K ? json(*p.K) : json(nullptr);
  return j;
}

json to_json(const MonotonicityReport& r) {
  return {{"name", r.name},
          {"grid", r.grid},
          {"pass", r.pass},
          {"failures", r.failures},
          {"worst_point", to_json(r.worst_point)},
          {"worst_value", number(r.worst_value)},
          {"min_value", number(r.min_value)},
          {"max_value", number(r.max_value)}};
}

json to_json(const RadiusResult& r) {
  return {{"variant", variant_code(r.spec.variant)},
          {"label", r.label},
          {"params", to_json(r.spec.params)},
          {"gamma", r.spec.params.gamma},
          {"k", r.spec.params.k},
          {"rho_star", r.rho_star},
          {"bracket", {r.lo, r.hi}},
          {"iterations", r.iterations},
          {"reference", r.reference ? json(*r.reference) : json(nullptr)},
          {"abs_err", number(r.abs_err)}};
}

json to_json(const T4Row& r) {
  return {{"gamma", r.gamma},
          {"k", r.k},
          {"K_star", r.K_star},
          {"K_star_formula", r.K_star_formula},
          {"statement", r.statement},
          {"proof", r.proof},
          {"statement_admissible", r.statement_admissible},
          {"proof_admissible", r.proof_admissible},
          {"statement_sharp", r.statement_sharp},
          {"proof_sharp", r.proof_sharp},
          {"verdict", r.verdict}};
}

void Table::add(std::vector<Cell> row) {
  if (row.size() != header.size()) throw std::logic_error("table row width differs from header");
  rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream& os) const {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

json Table::to_json() const {
  json arr = json::array();
  for (const auto& row : rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              obj[header[i]] = number(v);
            } else {
              obj[header[i]] = v;
            }
          },
          row[i]);
    }
    arr.push_back(std::move(obj));
  }
  return arr;
}

Table radius_table(const std::vector<RadiusResult>& results) {
  Table t;
  t.header = {"variant", "gamma", "k", "rho_star", "reference", "abs_err", "iterations"};
  for (const auto& r : results) {
    t.add({std::string(variant_code(r.spec.variant)), r.spec.params.gamma, r.spec.params.k, r.rho_star,
           r.reference.value_or(std::nan("")), r.abs_err, static_cast<long long>(r.iterations)});
  }
  return t;
}

}  // namespace bohrlab::io
