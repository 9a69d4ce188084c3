#include <doctest.h>

#include <stdexcept>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spnet/geometry.hpp"
#include "spnet/predicates.hpp"

using namespace spnet;

TEST_CASE("finite model: n points in the sqrt(n) window, deterministic") {
  const auto a = sample_finite_model(400, 9);
  const auto b = sample_finite_model(400, 9);
  CHECK(a.size() == 400);
  CHECK(a.window.side() == doctest::Approx(20.0));
  CHECK(a.points == b.points);
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a) != config_hash(sample_finite_model(400, 10)));
  for (const auto& p : a.points) CHECK(a.window.contains(p));
  CHECK(general_position_violations(a.points, a.window).empty());
}

TEST_CASE("poisson model count moments") {
  const Window w(10.0);
  double s = 0, s2 = 0;
  const int reps = 1000;
  for (int r = 0; r < reps; ++r) {
    const double k = static_cast<double>(sample_poisson(w, 0.5, 100 + r).size());
    s += k;
    s2 += k * k;
  }
  const double m = s / reps;
  CHECK(std::abs(m - 50.0) < 4 * std::sqrt(50.0 / reps));
  CHECK(s2 / reps - m * m == doctest::Approx(50.0).epsilon(0.2));
}

TEST_CASE("general position screen flags duplicates and equal distances") {
  const Window w(10);
  std::vector<Point> p{{1, 1}, {2, 1}, {5, 5}, {1, 1}};
  auto v = general_position_violations(p, w);
  CHECK(std::find(v.begin(), v.end(), 3u) != v.end());
  std::vector<Point> iso{{1, 1}, {2, 1}, {1.5, 1 + std::sqrt(0.75)}};
  CHECK(!general_position_violations(iso, w).empty());
}

TEST_CASE("inner window") {
  const Window w(50);
  CHECK(w.in_inner({25, 25}, 0.2));
  CHECK(w.in_inner({10, 40}, 0.2));
  CHECK(!w.in_inner({9.9, 25}, 0.2));
  CHECK(w.in_inner({0, 0}, 0.0));
}

namespace {

// Lens area by integrating the chord length across the overlap.
double lens_by_chords(double r1, double r2, double d) {
  const int steps = 200000;
  const double lo = std::max(-r1, d - r2), hi = std::min(r1, d + r2);
  if (hi <= lo) return 0;
  double area = 0;
  const double h = (hi - lo) / steps;
  for (int k = 0; k < steps; ++k) {
    const double x = lo + (k + 0.5) * h;
    const double a = std::sqrt(std::max(0.0, r1 * r1 - x * x));
    const double b = std::sqrt(std::max(0.0, r2 * r2 - (x - d) * (x - d)));
    area += 2 * std::min(a, b) * h;
  }
  return area;
}

}  // namespace

TEST_CASE("lens area against chord integration") {
  for (auto [r1, r2, d] : {std::tuple{1.0, 1.0, 1.0}, {0.5, 0.5, 0.0}, {1.0, 0.6, 0.9}, {2.0, 0.5, 1.2}, {1.0, 1.0, 2.5}}) {
    CAPTURE(r1);
    CAPTURE(d);
    CHECK(lens_area(r1, r2, d) == doctest::Approx(lens_by_chords(r1, r2, d)).epsilon(1e-6));
  }
  CHECK(lens_area(1, 1, 1) == doctest::Approx(2 * std::numbers::pi / 3 - std::sqrt(3.0) / 2));
  CHECK(lens_area(0.5, 0.5, 0) == doctest::Approx(std::numbers::pi / 4));
}

TEST_CASE("grid query matches brute force") {
  const auto pts = oracle::random_points(500, 20, 5);
  const Window w(20);
  const GridIndex g(pts, w, 1.3);
  for (auto [x0, y0, x1, y1] : {std::tuple{0.0, 0.0, 20.0, 20.0}, {3.2, 4.1, 7.7, 5.0}, {-5.0, -5.0, 1.0, 1.0},
                                {19.5, 0.0, 25.0, 3.0}, {10.0, 10.0, 10.0, 10.0}}) {
    std::vector<std::size_t> brute;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].x >= x0 && pts[i].x <= x1 && pts[i].y >= y0 && pts[i].y <= y1) brute.push_back(i);
    }
    CHECK(g.query(x0, y0, x1, y1) == brute);
  }
}

TEST_CASE("exact predicates") {
  CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) > 0);
  CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) < 0);
  CHECK(orient2d({0, 0}, {1, 1}, {3, 3}) == 0);
  // nearly collinear points where naive evaluation is unreliable
  const Point a{0.5, 0.5}, b{12, 12}, c{24, 24};
  CHECK(orient2d(a, b, c) == 0);
  CHECK(orient2d(a, b, {24, std::nextafter(24.0, 25.0)}) > 0);
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {0.5, 0.5}) > 0);
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {2, 2}) < 0);
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {1, 1}) == 0);
  CHECK(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK(!segments_cross({0, 0}, {1, 1}, {1, 1}, {2, 0}));
  CHECK(!segments_cross({0, 0}, {1, 0}, {0, 1}, {1, 1}));
}
