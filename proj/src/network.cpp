#include "spnet/network.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spnet {

std::string to_string(VertexKind k) {
  switch (k) {
    case VertexKind::city: return "city";
    case VertexKind::junction: return "junction";
    case VertexKind::boundary_anchor: return "boundary-anchor";
  }
  return "city";
}

VertexKind vertex_kind_from_string(const std::string& s) {
  if (s == "city") return VertexKind::city;
  if (s == "junction") return VertexKind::junction;
  if (s == "boundary-anchor") return VertexKind::boundary_anchor;
  throw std::invalid_argument("unknown vertex kind: " + s);
}

std::string FamilyTag::describe() const {
  std::ostringstream os;
  os << label;
  for (const auto& [k, v] : params) os << ' ' << k << '=' << v;
  return os.str();
}

Network::Network(std::shared_ptr<const PointConfig> config, FamilyTag tag, std::vector<Vertex> extra_vertices,
                 std::vector<std::pair<VertexId, VertexId>> pairs)
    : config_(std::move(config)), tag_(std::move(tag)) {
  if (!config_) throw std::invalid_argument("Network: null configuration");
  const std::size_t n = config_->size();
  vertices_.reserve(n + extra_vertices.size());
  for (std::size_t i = 0; i < n; ++i) vertices_.push_back({config_->points[i], VertexKind::city, i});
  for (auto& v : extra_vertices) {
    if (v.kind == VertexKind::city) throw std::invalid_argument("Network: extra vertices cannot be cities");
    vertices_.push_back(v);
  }

  for (auto& [u, v] : pairs) {
    if (u == v) throw std::invalid_argument("Network: self-loop");
    if (u >= vertices_.size() || v >= vertices_.size()) throw std::invalid_argument("Network: vertex out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  edges_.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges_.push_back({u, v, distance(vertices_[u].pos, vertices_[v].pos)});

  adj_start_.assign(vertices_.size() + 1, 0);
  for (const auto& e : edges_) {
    ++adj_start_[e.u + 1];
    ++adj_start_[e.v + 1];
  }
  std::partial_sum(adj_start_.begin(), adj_start_.end(), adj_start_.begin());
  adj_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(adj_start_.begin(), adj_start_.end() - 1);
  for (std::uint32_t k = 0; k < edges_.size(); ++k) {
    adj_[fill[edges_[k].u]++] = k;
    adj_[fill[edges_[k].v]++] = k;
  }
}

bool Network::has_edge(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(a, b),
                                   [](const Edge& e, const std::pair<VertexId, VertexId>& p) {
                                     return std::make_pair(e.u, e.v) < p;
                                   });
  return it != edges_.end() && it->u == a && it->v == b;
}

double Network::total_length() const {
  double sum = 0.0;
  for (const auto& e : edges_) sum += e.length;
  return sum;
}

std::vector<std::pair<VertexId, VertexId>> Network::edge_pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

bool Network::cities_connected() const {
  const std::size_t n = city_count();
  if (n <= 1) return true;
  std::vector<char> seen(vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t cities_seen = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (auto e : incident(v)) {
      const VertexId w = other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        if (is_city(w)) ++cities_seen;
        stack.push_back(w);
      }
    }
  }
  return cities_seen == n;
}

Network Network::with_tag(FamilyTag tag) const {
  Network copy = *this;
  copy.tag_ = std::move(tag);
  return copy;
}

bool edges_subset(const Network& a, const Network& b) {
  return std::all_of(a.edges().begin(), a.edges().end(), [&](const Edge& e) { return b.has_edge(e.u, e.v); });
}

}  // namespace spnet
