#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spnet/geometry.hpp"

namespace spnet {

using VertexId = std::uint32_t;

enum class VertexKind { city, junction, boundary_anchor };

std::string to_string(VertexKind k);
VertexKind vertex_kind_from_string(const std::string& s);

struct Vertex {
  Point pos;
  VertexKind kind = VertexKind::city;
  std::optional<std::size_t> city_id;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double length = 0.0;
};

/// Family label plus numeric parameters, e.g. {"beta", {{"beta", 1.0}}}.
struct FamilyTag {
  std::string label;
  std::map<std::string, double> params;

  std::string describe() const;
};

/// Undirected geometric graph over the cities of a PointConfig, possibly with
/// extra junction / boundary-anchor vertices. Vertices [0, n) are the cities in
/// configuration order. Immutable once constructed.
class Network {
 public:
  /// Builds from vertex pairs; pairs are normalized (u < v), sorted and deduplicated.
  /// Throws std::invalid_argument on self-loops or out-of-range indices.
  Network(std::shared_ptr<const PointConfig> config, FamilyTag tag, std::vector<Vertex> extra_vertices,
          std::vector<std::pair<VertexId, VertexId>> pairs);

  /// City-only network.
  Network(std::shared_ptr<const PointConfig> config, FamilyTag tag, std::vector<std::pair<VertexId, VertexId>> pairs)
      : Network(std::move(config), std::move(tag), {}, std::move(pairs)) {}

  const PointConfig& config() const { return *config_; }
  const std::shared_ptr<const PointConfig>& config_ptr() const { return config_; }
  const FamilyTag& tag() const { return tag_; }

  std::size_t city_count() const { return config_->size(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  const Point& position(VertexId v) const { return vertices_[v].pos; }
  bool is_city(VertexId v) const { return v < city_count(); }

  /// Edge indices incident to v.
  std::span<const std::uint32_t> incident(VertexId v) const {
    return {adj_.data() + adj_start_[v], adj_start_[v + 1] - adj_start_[v]};
  }
  std::size_t degree(VertexId v) const { return adj_start_[v + 1] - adj_start_[v]; }
  VertexId other(std::uint32_t edge, VertexId v) const { return edges_[edge].u == v ? edges_[edge].v : edges_[edge].u; }

  bool has_edge(VertexId a, VertexId b) const;
  double total_length() const;

  /// Sorted (u < v) endpoint pairs.
  std::vector<std::pair<VertexId, VertexId>> edge_pairs() const;

  /// True when all city vertices lie in one connected component.
  bool cities_connected() const;

  /// Replaces the family tag (used when a derived network keeps the family).
  Network with_tag(FamilyTag tag) const;

 private:
  std::shared_ptr<const PointConfig> config_;
  FamilyTag tag_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> adj_start_;
  std::vector<std::uint32_t> adj_;
};

/// Whether every edge of a is an edge of b (both over the same cities, city-only pairs).
bool edges_subset(const Network& a, const Network& b);

}  // namespace spnet
