#include <doctest.h>

#include "bohrlab/parallel.hpp"
#include "bohrlab/solver.hpp"

using namespace bohrlab;

namespace {

FunctionalSpec spec_of(Variant v, double gamma = 0.0, double k = 0.0) {
  FunctionalSpec s{v, {}};
  s.params.gamma = gamma;
  s.params.k = k;
  return s;
}

}  // namespace

TEST_CASE("registry values") {
  CHECK(find_entry(spec_of(Variant::Harmonic_T2, 0.0, 1.0))->radius({}) == doctest::Approx(0.2));
  CHECK(find_entry(spec_of(Variant::Harmonic_T2, 0.0, 1.0))->label == "T2-k1");
  Params p;
  p.gamma = 0.2;
  CHECK(find_entry(spec_of(Variant::Classical_B, 0.2))->radius(p) == doctest::Approx(0.375));
  p.k = 1.0;
  CHECK(find_entry(spec_of(Variant::Harmonic_F, 0.2, 1.0))->label == "F-k1");
  CHECK(find_entry(spec_of(Variant::Harmonic_F, 0.2, 1.0))->radius(p) == doctest::Approx(1.2 / 5.2));
  CHECK_FALSE(find_entry(spec_of(Variant::FImprovedArea_T4))->confirmed);
  CHECK(find_entry(spec_of(Variant::RefinedShift_J)) == nullptr);
  auto g = spec_of(Variant::PowerM_G, 0.7);
  CHECK(find_entry(g) == nullptr);
  for (const auto& e : registry()) {
    for (double gm : {0.0, 0.2, 0.5, 0.7}) {
      for (double k : {0.0, 0.25, 0.5, 0.75, 0.99}) {
        Params q;
        q.gamma = gm;
        q.k = k;
        const double r = e.radius(q);
        CHECK(r > 0.0);
        CHECK(r < 1.0);
      }
    }
  }
}

TEST_CASE("sup over the family") {
  auto t2 = spec_of(Variant::Harmonic_T2);
  auto at = sup_over_family(t2, 1.0 / 3.0);
  CHECK(at.value <= 1.0);
  CHECK(at.value > 1.0 - 1e-7);
  CHECK(at.x > 0.999);
  CHECK(sup_over_family(t2, 0.3).value < 1.0);
  for (auto v : {Variant::Refined_T1, Variant::Classical_B, Variant::HImprovedArea_T3}) {
    const double s = sup_over_family(spec_of(v, 0.3, 0.5), 1e-6).value;
    CHECK(s <= 1.0);
    CHECK(s > 0.99);
  }
  double prev = 0.0;
  for (int i = 1; i < 40; ++i) {
    const double s = sup_over_family(spec_of(Variant::Refined_D, 0.3), 0.025 * i).value;
    CHECK(s >= prev - 1e-15);
    prev = s;
  }
}

TEST_CASE("critical radii") {
  for (double g : {0.0, 0.2, 0.5, 0.7}) {
    auto r = critical_radius(spec_of(Variant::Refined_T1, g), 1e-9);
    CHECK(r.abs_err <= 1e-6);
    CHECK(r.lo <= r.rho_star);
    CHECK(r.rho_star <= r.hi);
    CHECK(r.hi - r.lo <= 1e-9);
  }
  CHECK(critical_radius(spec_of(Variant::Harmonic_T2, 0, 0.5)).rho_star == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(critical_radius(spec_of(Variant::Classical_B, 0.2)).rho_star == doctest::Approx(0.375).epsilon(1e-6));
  CHECK_THROWS_AS(critical_radius(spec_of(Variant::Refined_T1), 1e-12), std::domain_error);
  auto g = spec_of(Variant::PowerM_G, 0.7);
  g.params.m = 3;
  CHECK_THROWS_AS(critical_radius(g), BracketFailure);
}

TEST_CASE("radius recovery across the registry grid") {
  std::vector<FunctionalSpec> specs;
  for (auto v : {Variant::Refined_T1, Variant::Harmonic_T2, Variant::HImprovedArea_T3, Variant::Classical_B,
                 Variant::ImprovedArea_C, Variant::Refined_D, Variant::Harmonic_F, Variant::PowerM_G}) {
    for (double g : {0.0, 0.2, 0.5, 0.7}) {
      for (double k : {0.0, 0.25, 0.5, 0.75, 0.99}) {
        auto s = spec_of(v, g, k);
        if (find_entry(s)) specs.push_back(s);
      }
    }
  }
  auto results = radius_sweep(specs, 1e-9, thread_budget());
  REQUIRE(results.size() == specs.size());
  for (const auto& r : results) {
    INFO(variant_name(r.spec.variant), " gamma=", r.spec.params.gamma, " k=", r.spec.params.k);
    CHECK(r.abs_err <= 1e-6);
  }
  // shifted-disk radii do not depend on gamma
  for (double k : {0.0, 0.5}) {
    const double r0 = critical_radius(spec_of(Variant::Harmonic_T2, 0.0, k)).rho_star;
    for (double g : {0.2, 0.5, 0.7}) {
      CHECK(std::abs(critical_radius(spec_of(Variant::Harmonic_T2, g, k)).rho_star - r0) <= 1e-6);
    }
  }
}

TEST_CASE("sweep order follows input regardless of threads") {
  std::vector<FunctionalSpec> specs;
  for (double g : {0.7, 0.0, 0.5, 0.2}) specs.push_back(spec_of(Variant::Classical_B, g));
  auto a = radius_sweep(specs, 1e-8, 1);
  auto b = radius_sweep(specs, 1e-8, 4);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CHECK(a[i].spec.params.gamma == specs[i].params.gamma);
    CHECK(a[i].rho_star == b[i].rho_star);
  }
}

TEST_CASE("violation witnesses") {
  auto t2 = spec_of(Variant::Harmonic_T2);
  auto w = violation_witness(t2, 0.4);
  REQUIRE(w);
  CHECK(w->lhs > 1.0);
  CHECK(closed_form_lhs(t2, 0.99, 0.4) == doctest::Approx(1.00318).epsilon(1e-5));

  auto w1 = violation_witness(spec_of(Variant::Refined_T1), 0.35);
  REQUIRE(w1);
  CHECK(w1->a >= 0.9);
  CHECK(violation_witness(spec_of(Variant::Harmonic_T2, 0, 1.0), 0.21));
  CHECK_FALSE(violation_witness(t2, 0.3));

  for (const auto& e : registry()) {
    if (!e.confirmed) continue;
    for (double g : {0.0, 0.5}) {
      for (double k : {0.0, 0.5, 1.0}) {
        auto s = spec_of(e.variant, g, k);
        if (find_entry(s) != &e) continue;
        const double rho0 = e.radius(s.params);
        INFO(e.label, " gamma=", g, " k=", k);
        CHECK(violation_witness(s, rho0 + 1e-3));
        CHECK(sup_over_family(s, rho0 - 1e-4).value <= 1.0 + 1e-9);
      }
    }
  }
}

TEST_CASE("sharpest area constant on the extremal family") {
  for (double k : {0.0, 0.5, 1.0}) {
    auto s = spec_of(Variant::HImprovedArea_T3, 0.0, k);
    CHECK(sharpest_K(s, 1e-9) == doctest::Approx(extremal_sharp_constant_h(k)).epsilon(1e-7));
    // the sharpest K is gamma-free for the unscaled area
    CHECK(sharpest_K(spec_of(Variant::HImprovedArea_T3, 0.6, k), 1e-9) ==
          doctest::Approx(extremal_sharp_constant_h(k)).epsilon(1e-7));
  }
  CHECK(extremal_sharp_constant_h(0.0) == doctest::Approx(16.0 / 9.0));
  // every K below the sharp value keeps the inequality at rho0; above it fails
  auto s = spec_of(Variant::HImprovedArea_T3, 0.0, 0.5);
  const double K = sharpest_K(s);
  s.params.K = K * 0.999;
  CHECK(sup_excess(s, 0.25).value <= 1e-9);
  s.params.K = K * 1.001;
  CHECK(sup_excess(s, 0.25).value > 1e-9);
  CHECK_THROWS(sharpest_K(spec_of(Variant::Harmonic_T2)));
}

TEST_CASE("f-area constant report") {
  auto rows = t4_constant_report({0.0, 0.5}, {0.0, 0.5});
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(std::abs(r.K_star - r.K_star_formula) <= 1e-6);
    CHECK_FALSE(r.verdict.empty());
  }
  CHECK(rows[0].statement == doctest::Approx(rows[0].proof));
  CHECK(rows[0].statement_admissible);
  CHECK_FALSE(rows[2].statement_admissible);
}
