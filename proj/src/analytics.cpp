#include "spnet/analytics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spnet/quadrature.hpp"
#include "spnet/templates.hpp"

namespace spnet {

namespace {

struct SimpsonCell {
  double a, b, fa, fm, fb, whole;
};

double simpson_step(const std::function<double(double)>& f, const SimpsonCell& c, double tol, int depth) {
  const double m = (c.a + c.b) / 2;
  const double lm = (c.a + m) / 2, rm = (m + c.b) / 2;
  const double flm = f(lm), frm = f(rm);
  const double left = (m - c.a) / 6 * (c.fa + 4 * flm + c.fm);
  const double right = (c.b - m) / 6 * (c.fm + 4 * frm + c.fb);
  const double delta = left + right - c.whole;
  if (depth <= 0 || std::abs(delta) <= 15 * tol) return left + right + delta / 15;
  return simpson_step(f, {c.a, m, c.fa, flm, c.fm, left}, tol / 2, depth - 1) +
         simpson_step(f, {m, c.b, c.fm, frm, c.fb, right}, tol / 2, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
  // Split once up front so a coarse first estimate cannot accept a peaked integrand.
  const double m = (a + b) / 2;
  const double fa = f(a), fm = f(m), fb = f(b);
  auto half = [&](double lo, double hi, double flo, double fhi) {
    SimpsonCell c{lo, hi, flo, f((lo + hi) / 2), fhi, 0};
    c.whole = (hi - lo) / 6 * (c.fa + 4 * c.fm + c.fb);
    return simpson_step(f, c, tol / 2, max_depth);
  };
  return half(a, m, fa, fm) + half(m, b, fm, fb);
}

double tail_cutoff(const std::function<double(double)>& f, double threshold, double start) {
  double t = start;
  while (std::abs(f(t)) >= threshold && t < 1e6) t *= 2;
  return t;
}

double integrate_half_line(const std::function<double(double)>& f, double tol) {
  return adaptive_simpson(f, 0.0, tail_cutoff(f), tol);
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::closed_form: return "closed-form";
    case Provenance::quadrature: return "quadrature";
    case Provenance::reference: return "reference";
  }
  return "closed-form";
}

Lemma1Result lemma1(double c) {
  if (!(c > 0)) throw std::invalid_argument("lemma1: template area must be positive");
  return {std::pow(std::numbers::pi, 1.5) / (4 * std::pow(c, 1.5)), std::numbers::pi / c};
}

double degree_integral(double c) {
  return integrate_half_line([c](double s) { return std::exp(-c * s * s) * 2 * std::numbers::pi * s; }, 1e-10);
}

double length_integral(double c) {
  return 0.5 * integrate_half_line(
                   [c](double s) { return s * std::exp(-c * s * s) * 2 * std::numbers::pi * s; }, 1e-10);
}

double delaunay_L() { return 32.0 / (3.0 * std::numbers::pi); }

double hammersley_mean_edge() {
  auto integrand = [](double x, double y) { return std::hypot(x, y) * std::exp(-x - y); };
  const double cutoff = tail_cutoff([&](double t) { return integrand(t, 0.0); });
  auto inner = [&](double x) {
    return adaptive_simpson([&](double y) { return integrand(x, y); }, 0.0, cutoff, 1e-11);
  };
  return adaptive_simpson(inner, 0.0, cutoff, 1e-9);
}

std::vector<BetaPoint> beta_curve_analytic(const std::vector<double>& betas) {
  std::vector<BetaPoint> out;
  out.reserve(betas.size());
  for (double b : betas) {
    const auto r = lemma1(template_area(b));
    out.push_back({b, r.length, r.degree});
  }
  return out;
}

std::vector<AnalyticValue> analytic_constants() {
  const double c_gabriel = template_area(1.0);
  const double c_rng = template_area(2.0);
  const auto g = lemma1(c_gabriel);
  const auto r = lemma1(c_rng);
  const double h = hammersley_mean_edge();
  return {
      {"c_gabriel", c_gabriel, Provenance::closed_form, 0.0},
      {"c_relative_neighborhood", c_rng, Provenance::closed_form, 0.0},
      {"L_gabriel", g.length, Provenance::closed_form, 0.0},
      {"degree_gabriel", g.degree, Provenance::closed_form, 0.0},
      {"L_relative_neighborhood", r.length, Provenance::closed_form, 0.0},
      {"degree_relative_neighborhood", r.degree, Provenance::closed_form, 0.0},
      {"L_delaunay", delaunay_L(), Provenance::closed_form, 0.0},
      {"degree_delaunay", 6.0, Provenance::closed_form, 0.0},
      {"hammersley_mean_edge", h, Provenance::quadrature, 1e-6},
      {"L_hammersley", 2 * h, Provenance::quadrature, 2e-6},
      {"degree_hammersley", 4.0, Provenance::closed_form, 0.0},
      {"L_mst", kMstLengthReference, Provenance::reference, 0.0},
      {"degree_mst", 2.0, Provenance::closed_form, 0.0},
  };
}

}  // namespace spnet
