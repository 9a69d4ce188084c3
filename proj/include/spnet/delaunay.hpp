#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spnet/geometry.hpp"
#include "spnet/network.hpp"

namespace spnet {

/// Raised when a construction cannot proceed because the input is degenerate
/// (all points collinear, duplicate points).
class DegenerateConfiguration : public std::runtime_error {
 public:
  explicit DegenerateConfiguration(const std::string& what) : std::runtime_error(what) {}
};

/// Edges of the Delaunay triangulation, as sorted index pairs (i < j).
///
/// Incremental Bowyer-Watson insertion in Hilbert order. The outside of the
/// convex hull is represented by ghost triangles sharing a vertex at infinity,
/// so no finite super-triangle is needed and hull edges are never lost.
/// Orientation and in-circle tests use a filtered double evaluation with an
/// exact integer fallback.
std::vector<std::pair<VertexId, VertexId>> delaunay_edges(std::span<const Point> points);

/// Triangles (CCW index triples) of the Delaunay triangulation.
std::vector<std::array<VertexId, 3>> delaunay_triangles(std::span<const Point> points);

}  // namespace spnet
