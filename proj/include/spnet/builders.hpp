#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "spnet/delaunay.hpp"
#include "spnet/geometry.hpp"
#include "spnet/network.hpp"
#include "spnet/templates.hpp"

namespace spnet {

using ConfigPtr = std::shared_ptr<const PointConfig>;

inline ConfigPtr share(PointConfig config) { return std::make_shared<const PointConfig>(std::move(config)); }

/// Edge iff Euclidean distance <= c.
Network build_geometric(const ConfigPtr& config, double c);

/// Edge iff either endpoint is among the other's K nearest neighbours.
Network build_k_neighbor(const ConfigPtr& config, std::size_t k);

/// Euclidean minimum spanning tree (Prim on the complete distance graph).
Network build_mst(const ConfigPtr& config);

/// Delaunay triangulation. Throws DegenerateConfiguration for fewer than 3 points
/// or an all-collinear configuration.
Network build_delaunay(const ConfigPtr& config);

/// Proximity graph of a template: edge (x,y) iff A(x,y) holds no other city.
/// For beta >= 1 only Delaunay edges are tested; for beta < 1 every pair is
/// tested with a grid search that stops at the first blocker.
Network build_proximity(const ConfigPtr& config, const Template& t);

/// Edge iff the direct step is the cheapest route when a route costs the sum
/// of p-th powers of its step lengths. Dense Dijkstra per source, O(n^3).
Network build_gp(const ConfigPtr& config, double p, unsigned workers = 1);

/// A straight line {z : (z - centre) . (cos a, sin a) = offset} in window coordinates.
struct Line {
  double angle = 0.0;
  double offset = 0.0;
};

/// Isotropic Poisson line process hitting the disc of radius D (half window
/// diagonal) around the window centre: count ~ Poisson(intensity * 2D),
/// angle uniform on [0, pi), offset uniform on [-D, D].
std::vector<Line> sample_line_process(const Window& window, double intensity, std::uint64_t seed);

/// Clips a line to the window; returns false when it misses.
bool clip_line(const Window& window, const Line& line, Point& a, Point& b);

/// Adds the given lines (clipped to the window) to the base network. Line ends
/// become boundary-anchor vertices; a junction is inserted wherever a line
/// crosses a base edge or another line. Base-base crossings are left alone.
Network overlay_lines(const Network& base, std::span<const Line> lines);

Network overlay_line_process(const Network& base, double intensity, std::uint64_t seed);

/// Replaces every interior crossing of two edges by a junction vertex.
Network planarize(const Network& net);

/// Number of pairs of edges that cross at a point interior to both.
std::size_t count_crossings(const Network& net);

}  // namespace spnet
