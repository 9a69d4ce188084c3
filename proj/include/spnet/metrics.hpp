#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spnet/network.hpp"

namespace spnet {

/// Discretization of the route-length ratio profile.
struct ProfileParams {
  double bin_width = 0.25;
  double d_max = 10.0;
  /// Fraction of the window side excluded on every edge for both pair endpoints.
  double inner_margin = 0.1;
  std::size_t min_count = 100;
  /// Route over the planarized network instead of the network itself.
  bool planarize = false;
};

/// One distance bin. Bin k covers [(k - 1/2) w, (k + 1/2) w), clipped at 0,
/// so centres sit on multiples of the bin width.
struct RhoBin {
  double center = 0.0;
  std::size_t count = 0;
  /// Mean of r over the bin; absent when count < min_count; +inf if any pair is unreachable.
  std::optional<double> mean_ratio;
  double max_ratio = 0.0;
};

struct RhoProfile {
  double bin_width = 0.25;
  double d_max = 10.0;
  double inner_margin = 0.1;
  std::size_t min_count = 100;
  std::vector<RhoBin> bins;

  /// Index of the qualifying bin with the largest mean (first on ties).
  std::optional<std::size_t> argmax() const;
  /// Max of qualifying bin means; NaN when no bin qualifies.
  double r_tilde() const;
  /// Mean ratio of the bin whose centre is nearest d (NaN if it does not qualify).
  double value_at(double d) const;
  /// Last three qualifying bin means strictly increasing: a finite-n sign that
  /// the profile grows without bound.
  bool unbounded_suspected() const;
};

struct NetSummary {
  /// Total length over window area.
  double length = 0.0;
  /// Inner-window estimate, see normalized_length.
  double length_inner = 0.0;
  double avg_degree = 0.0;
  double r_tilde = 0.0;
  double r_max = 0.0;
  double r_ave = 0.0;
  double unreachable_fraction = 0.0;
  bool unbounded_suspected = false;
  std::size_t pair_count = 0;
};

/// Sum of edge lengths per unit area. With margin > 0, each edge counts half
/// for every endpoint inside the inner window, and the total is divided by the
/// number of inner-window cities (the inner area in density-1 units).
double normalized_length(const Network& net, double inner_margin = 0.0);

/// Mean degree of city vertices inside the inner window.
double avg_degree(const Network& net, double inner_margin);

/// Shortest-path distances from a city to every city (+inf if unreachable).
std::vector<double> route_lengths(const Network& net, VertexId source);

/// Route-length ratio profile over inner-window city pairs with d <= d_max.
RhoProfile rho_profile(const Network& net, const ProfileParams& params, unsigned workers = 1);

/// Profile together with the pair statistics.
struct RouteStats {
  RhoProfile profile;
  double r_max = 0.0;
  double r_ave = 0.0;
  double unreachable_fraction = 0.0;
  std::size_t pair_count = 0;
};

/// r_max, r_ave and the unreachable fraction are taken over every inner-window
/// city pair regardless of distance; the profile only uses pairs with d <= d_max.
RouteStats route_stats(const Network& net, const ProfileParams& params, unsigned workers = 1);

NetSummary summarize(const Network& net, const ProfileParams& params, unsigned workers = 1);

}  // namespace spnet
