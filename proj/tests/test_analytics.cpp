#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <numbers>

#include "spnet/analytics.hpp"
#include "spnet/geometry.hpp"
#include "spnet/hammersley.hpp"
#include "spnet/quadrature.hpp"
#include "spnet/templates.hpp"

using namespace spnet;
using std::numbers::pi;

TEST_CASE("lemma1 closed forms") {
  const auto g = lemma1(pi / 4);
  CHECK(g.length == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(g.degree == doctest::Approx(4.0).epsilon(1e-14));
  const auto rn = lemma1(lens_area(1, 1, 1));
  CHECK(std::round(rn.length * 100) / 100 == doctest::Approx(1.02));
  CHECK(std::round(rn.degree * 100) / 100 == doctest::Approx(2.56));
}

TEST_CASE("lemma1 matches its defining integrals") {
  for (double c : {0.3, pi / 4, 1.2284, 3.0}) {
    CAPTURE(c);
    CHECK(std::abs(degree_integral(c) - pi / c) < 1e-6);
    CHECK(std::abs(length_integral(c) - std::pow(pi, 1.5) / (4 * std::pow(c, 1.5))) < 1e-6);
  }
}

TEST_CASE("quadrature basics") {
  CHECK(adaptive_simpson([](double x) { return x * x; }, 0, 3, 1e-12) == doctest::Approx(9.0));
  CHECK(integrate_half_line([](double x) { return std::exp(-x); }, 1e-10) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(tail_cutoff([](double x) { return std::exp(-x); }) >= 27.0);
}

TEST_CASE("Delaunay and Hammersley constants") {
  CHECK(std::abs(delaunay_L() - 32 / (3 * pi)) < 1e-12);
  CHECK(hammersley_mean_edge() == doctest::Approx(1.62).epsilon(0.005 / 1.62));
  CHECK(2 * hammersley_mean_edge() == doctest::Approx(3.25).epsilon(0.01 / 3.25));
  // with sqrt(x^2+y^2) replaced by x the same quadrature gives 1
  const double ex = integrate_half_line(
      [](double x) { return integrate_half_line([x](double y) { return x * std::exp(-x - y); }, 1e-10); }, 1e-9);
  CHECK(ex == doctest::Approx(1.0).epsilon(1e-6));
  // the Hammersley mean edge by an independent midpoint rule in polar form:
  // E|Z| = int_0^{pi/2} int_0^inf r^2 e^{-r(cos t + sin t)} dr dt = int 2/(cos t + sin t)^3 dt
  double polar = 0;
  const int k = 200000;
  for (int i = 0; i < k; ++i) {
    const double t = (i + 0.5) * (pi / 2) / k;
    polar += 2 / std::pow(std::cos(t) + std::sin(t), 3) * (pi / 2) / k;
  }
  CHECK(hammersley_mean_edge() == doctest::Approx(polar).epsilon(1e-8));
}

TEST_CASE("beta curve: length falls and degree falls as beta grows") {
  const auto pts = beta_curve_analytic({0.8, 0.9, 1.0, 1.5, 2.0});
  for (std::size_t i = 1; i < pts.size(); ++i) {
    CHECK(pts[i].length < pts[i - 1].length);
    CHECK(pts[i].degree < pts[i - 1].degree);
  }
  CHECK(pts[2].length == doctest::Approx(2.0));
  CHECK(pts[0].length == doctest::Approx(lemma1(template_area(0.8)).length));
}

TEST_CASE("named constants") {
  const auto all = analytic_constants();
  auto find = [&](const std::string& n) {
    for (const auto& v : all) {
      if (v.name == n) return v;
    }
    FAIL("missing constant " << n);
    return AnalyticValue{};
  };
  CHECK(find("L_gabriel").value == doctest::Approx(2.0));
  CHECK(find("degree_delaunay").value == doctest::Approx(6.0));
  CHECK(find("L_mst").provenance == Provenance::reference);
  CHECK(find("hammersley_mean_edge").provenance == Provenance::quadrature);
}
