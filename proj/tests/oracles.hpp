#pragma once

// Brute-force definitions used to check the fast builders. Everything here is
// quadratic or worse and written straight from the definitions, sharing no code
// with the library beyond Point and distance.

#include <utility>
#include <vector>

#include "spnet/geometry.hpp"
#include "spnet/network.hpp"

namespace oracle {

using Pairs = std::vector<std::pair<spnet::VertexId, spnet::VertexId>>;

/// (i,j) is an MST edge iff the edges strictly shorter than d(i,j) do not
/// connect i and j.
Pairs mst(const std::vector<spnet::Point>& p);

/// Beta-skeleton edges from the lune (beta >= 1) or circle (beta < 1) definition
/// in world coordinates.
Pairs beta_skeleton(const std::vector<spnet::Point>& p, double beta);

/// (i,j) is Delaunay iff some circle through both has no point strictly inside.
/// Circle centres lie on the bisector; each other point rules out a half-line
/// of the bisector parameter.
Pairs delaunay(const std::vector<spnet::Point>& p);

/// (i,j) kept iff d^p is a shortest path in the complete graph with weights d^p
/// (Floyd-Warshall).
Pairs gp(const std::vector<spnet::Point>& p, double power);

/// Every vertex pair's shortest route over the network by repeated relaxation
/// (Bellman-Ford to a fixed point).
std::vector<std::vector<double>> all_pairs_routes(const spnet::Network& net);

/// Uniform random points on [0, side]^2 from std::mt19937_64.
std::vector<spnet::Point> random_points(std::size_t n, double side, unsigned long long seed);

}  // namespace oracle
