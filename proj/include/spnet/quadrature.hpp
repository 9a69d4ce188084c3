#pragma once

#include <cmath>
#include <functional>

namespace spnet {

/// Adaptive Simpson quadrature on [a, b] with absolute tolerance `tol`.
/// Subdivision stops at `max_depth`; the Richardson-corrected estimate is returned.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 50);

/// Smallest upper limit T = start * 2^k such that |f(t)| < threshold for t at T.
/// Used to truncate exponentially decaying integrands on [0, inf).
double tail_cutoff(const std::function<double(double)>& f, double threshold = 1e-12, double start = 1.0);

/// Integral over [0, inf) of an exponentially decaying integrand, truncated at tail_cutoff.
double integrate_half_line(const std::function<double(double)>& f, double tol);

}  // namespace spnet
