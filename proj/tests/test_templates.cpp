#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <numbers>
#include <random>

#include "spnet/geometry.hpp"
#include "spnet/templates.hpp"

using namespace spnet;

namespace {

// Template area by Monte Carlo-free grid counting over the bounding box.
double grid_area(const Template& t) {
  const int k = 1500;
  const double w = t.half_width(), h = t.half_height();
  int inside = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const Point u{-w + (i + 0.5) * 2 * w / k, -h + (j + 0.5) * 2 * h / k};
      inside += t.contains_canonical(u) ? 1 : 0;
    }
  }
  return 4 * w * h * inside / (double(k) * k);
}

}  // namespace

TEST_CASE("named templates") {
  CHECK(template_area(1.0) == doctest::Approx(std::numbers::pi / 4));
  CHECK(template_area(2.0) == doctest::Approx(2 * std::numbers::pi / 3 - std::sqrt(3.0) / 2));
  CHECK(template_area(2.0) == doctest::Approx(lens_area(1, 1, 1)));
  CHECK(beta_template(1.0).contains_canonical({0, 0.49}));
  CHECK(!beta_template(1.0).contains_canonical({0, 0.51}));
  CHECK(beta_template(2.0).contains_canonical({0.3, 0.5}));
}

TEST_CASE("area matches grid counting across the beta range") {
  for (double beta : {0.3, 0.8, 0.95, 1.0, 1.3, 1.75, 2.0}) {
    CAPTURE(beta);
    CHECK(grid_area(beta_template(beta)) == doctest::Approx(beta_template(beta).area()).epsilon(2e-3));
  }
}

TEST_CASE("templates grow with beta and the two regimes agree at 1") {
  double prev = 0;
  for (double beta = 0.1; beta <= 2.0 + 1e-12; beta += 0.05) {
    const double a = template_area(std::min(beta, 2.0));
    CHECK(a > prev);
    prev = a;
  }
  const auto small = beta_template(1.0, TemplateRegime::lens_small_beta);
  const auto large = beta_template(1.0, TemplateRegime::lens_large_beta);
  CHECK(small.area() == doctest::Approx(large.area()));
  std::mt19937_64 g(1);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 10000; ++i) {
    const Point p{u(g), u(g)};
    CHECK(small.contains_canonical(p) == large.contains_canonical(p));
  }
}

TEST_CASE("endpoints are never inside; the region is open") {
  for (double beta : {0.5, 1.0, 2.0}) {
    const auto t = beta_template(beta);
    CHECK(!t.contains_canonical({-0.5, 0}));
    CHECK(!t.contains_canonical({0.5, 0}));
  }
}

TEST_CASE("world-frame membership is invariant under rigid motions") {
  const auto t = beta_template(1.4);
  const Point x{3, 4}, y{5, 7};
  const Point z{4.2, 5.3};
  const double th = 0.7;
  auto rot = [&](Point p) {
    return Point{10 + std::cos(th) * p.x - std::sin(th) * p.y, -2 + std::sin(th) * p.x + std::cos(th) * p.y};
  };
  CHECK(template_contains(t, x, y, z) == template_contains(t, rot(x), rot(y), rot(z)));
  CHECK(template_contains(t, x, y, z) == template_contains(t, y, x, z));
  const Point c = to_canonical(x, y, y);
  CHECK(c.x == doctest::Approx(0.5));
  CHECK(c.y == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("beta outside (0,2] is rejected") {
  CHECK_THROWS_AS(beta_template(0.0), std::invalid_argument);
  CHECK_THROWS_AS(beta_template(2.5), std::invalid_argument);
  CHECK_THROWS_AS(beta_template(-1), std::invalid_argument);
}
