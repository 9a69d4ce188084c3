#pragma once

#include <string>
#include <vector>

#include "spnet/hammersley.hpp"

namespace spnet {

enum class Provenance { closed_form, quadrature, reference };

std::string to_string(Provenance p);

struct AnalyticValue {
  std::string name;
  double value = 0.0;
  Provenance provenance = Provenance::closed_form;
  double tolerance = 0.0;
};

/// Length and degree of a proximity graph whose template has area c, in the
/// density-1 Poisson model: an edge of length s is present with probability
/// exp(-c s^2).
struct Lemma1Result {
  double length = 0.0;
  double degree = 0.0;
};

Lemma1Result lemma1(double c);

/// Same two quantities from the defining integrals, by quadrature.
double degree_integral(double c);
double length_integral(double c);

/// Delaunay normalized length, 32 / (3 pi).
double delaunay_L();

/// Reference Monte Carlo value for the MST normalized length.
inline constexpr double kMstLengthReference = 0.633;

struct BetaPoint {
  double beta = 0.0;
  double length = 0.0;
  double degree = 0.0;
};

std::vector<BetaPoint> beta_curve_analytic(const std::vector<double>& betas);

/// All named constants, in a fixed order.
std::vector<AnalyticValue> analytic_constants();

}  // namespace spnet
