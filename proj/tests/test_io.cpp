#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bohrlab/io.hpp"

using namespace bohrlab;

TEST_CASE("format_double") {
  CHECK(io::format_double(0.25) == "0.25");
  CHECK(std::stod(io::format_double(0.1)) == 0.1);
  CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(io::format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(io::format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(io::format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("series round trip") {
  auto s = extremal_series(0.3, 0.6);
  auto back = io::series_from_json(io::to_json(s));
  REQUIRE(back.coeffs().size() == s.coeffs().size());
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) CHECK(back.coeffs()[i] == s.coeffs()[i]);
  CHECK(back.value({0.2, 0.1}) == s.value({0.2, 0.1}));

  auto text = io::to_json(s).dump();
  auto reparsed = io::series_from_json(io::json::parse(text));
  CHECK(reparsed.coeffs()[5] == s.coeffs()[5]);

  io::json bad = {{"gamma", 0.0}, {"mode", "schwarz_pick"}, {"coeffs", {{0.5, 0.0}, {0.9, 0.0}}}};
  CHECK_THROWS(io::series_from_json(bad));
  io::json bad_mode = {{"gamma", 0.0}, {"mode", "free"}, {"coeffs", {{0.5, 0.0}}}};
  CHECK_THROWS(io::series_from_json(bad_mode));
}

TEST_CASE("pair round trip") {
  auto p = HarmonicPair::extremal(0.2, 0.5, 0.5, 0.5);
  auto back = io::pair_from_json(io::to_json(p));
  CHECK(back.k() == p.k());
  CHECK(std::ranges::equal(back.h().coeffs(), p.h().coeffs()));
  CHECK(std::ranges::equal(back.g().coeffs(), p.g().coeffs()));
}

TEST_CASE("evaluation record") {
  FunctionalSpec spec{Variant::Harmonic_T2, {}};
  spec.params.k = 0.5;
  auto pair = HarmonicPair::extremal(0.0, 0.5, 0.5, 0.25);
  auto r = evaluate(spec, pair, 0.25);
  auto j = io::to_json(spec, 0.25, r);
  CHECK(j["variant"] == "T2");
  CHECK(j["lhs"].get<double>() == r.lhs);
  CHECK(j["margin"].get<double>() == r.margin);
  CHECK(j["components"].contains("majorant"));
  CHECK(j["params"]["k"].get<double>() == 0.5);
}

TEST_CASE("radius table") {
  FunctionalSpec spec{Variant::Classical_B, {}};
  spec.params.gamma = 0.2;
  auto res = critical_radius(spec);
  auto t = io::radius_table({res});
  std::ostringstream os;
  t.write_csv(os);
  const auto text = os.str();
  CHECK(text.rfind("variant,gamma,k,rho_star,reference,abs_err,iterations\n", 0) == 0);
  CHECK(text.find("\nB,0.20000000000000001,0,") != std::string::npos);
  auto j = t.to_json();
  REQUIRE(j.size() == 1);
  CHECK(j[0]["reference"].get<double>() == doctest::Approx(0.375));
  auto rj = io::to_json(res);
  CHECK(rj["rho_star"].get<double>() == res.rho_star);
}
