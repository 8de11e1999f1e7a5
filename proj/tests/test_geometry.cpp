#include <doctest.h>

#include <random>

#include "bohrlab/geometry.hpp"

using namespace bohrlab;

namespace {

std::vector<cplx> unit_disk_samples(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::polar(0.999999 * std::sqrt(u(rng)), 6.283185307179586 * u(rng)));
  return out;
}

}  // namespace

TEST_CASE("disk center and radius") {
  auto d0 = make_disk(0.0);
  CHECK(d0.center() == cplx(0.0));
  CHECK(d0.radius() == 1.0);

  auto d5 = make_disk(0.5);
  CHECK(d5.center().real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(d5.radius() == doctest::Approx(2.0).epsilon(1e-15));

  auto d2 = make_disk(0.2);
  CHECK(d2.center().real() == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(d2.radius() == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(d2.radius() - std::abs(d2.center()) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("gamma outside the accepted range is rejected") {
  CHECK_THROWS_AS(make_disk(-0.1), std::domain_error);
  CHECK_THROWS_AS(make_disk(1.0), std::domain_error);
  CHECK_THROWS_AS(make_disk(1.0 - 1e-7), std::domain_error);
  CHECK_THROWS_AS(make_disk(std::nan("")), std::domain_error);
  CHECK_NOTHROW(make_disk(kMaxGamma));
}

TEST_CASE("z = 1 lies on every boundary circle") {
  for (double g : {0.0, 0.2, 0.4, 0.5, 0.7, 0.99}) {
    auto d = make_disk(g);
    CHECK(std::abs(d.center().real() + d.radius() - 1.0) < 1e-12);
    CHECK(d.classify(1.0) == Membership::Boundary);
    CHECK(d.classify(0.0) == Membership::Inside);
  }
  CHECK(make_disk(0.5).classify(cplx(-3.0)) == Membership::Boundary);
  CHECK(make_disk(0.5).classify(cplx(1.5)) == Membership::Outside);
}

TEST_CASE("round trip, containment and normalized radius on samples") {
  const auto xs = unit_disk_samples(1000, 11);
  for (double g : {0.0, 0.2, 0.4, 0.5, 0.7, 0.99}) {
    AffineTransport t(g);
    auto d = make_disk(g);
    for (const cplx& xi : xs) {
      const cplx z = t.forward(xi);
      CHECK(std::abs(t.backward(z) - xi) <= 1e-12);
      CHECK(d.contains(z));
      // |gamma + (1-gamma) z| = rho  <=>  |z - center| = rho/(1-gamma)
      CHECK(std::abs(std::abs(z - d.center()) - t.normalized_radius(z) / (1.0 - g)) <= 1e-12 * d.radius());
    }
    // the unit disk sits inside the shifted disk
    for (const cplx& w : xs) CHECK(d.contains(w));
    CHECK(std::abs(t.forward(0.0) - d.center()) < 1e-15);
  }
}

TEST_CASE("mobius automorphism") {
  auto p0 = mobius_auto(0.0);
  CHECK(p0(cplx(0.3, 0.4)) == cplx(-0.3, -0.4));
  auto p = mobius_auto(0.5);
  CHECK(p(0.0) == cplx(0.5));
  CHECK(std::abs(p(0.5)) < 1e-16);
  for (const cplx& w : unit_disk_samples(200, 3)) {
    CHECK(std::abs(p(w)) < 1.0);
    CHECK(std::abs(p(p(w)) - w) < 1e-12);
    const double h = 1e-6;
    const cplx fd = (p(w + h) - p(w - h)) / (2 * h);
    CHECK(std::abs(fd - p.derivative(w)) < 1e-6);
  }
  CHECK_THROWS_AS(mobius_auto(1.0), std::domain_error);
  CHECK_THROWS_AS(mobius_auto(-0.2), std::domain_error);
}

TEST_CASE("circle points") {
  auto pts = circle_points(make_disk(0.0), 4);
  REQUIRE(pts.size() == 4);
  const cplx expect[] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(pts[i] - expect[i]) < 1e-15);

  auto two = circle_points(make_disk(0.5), 2);
  CHECK(std::abs(two[0] - 1.0) < 1e-15);
  CHECK(std::abs(two[1] + 3.0) < 1e-15);

  for (double g : {0.0, 0.2, 0.4, 0.5, 0.7}) {
    AffineTransport t(g);
    for (const cplx& z : circle_points(make_disk(g), 256)) {
      CHECK(std::abs(std::abs(z + g / (1.0 - g)) - 1.0 / (1.0 - g)) <= 1e-12);
      CHECK(std::abs(t.normalized_radius(z) - 1.0) <= 1e-12);
    }
  }
  CHECK_THROWS(circle_points(make_disk(0.2), 1));
}
