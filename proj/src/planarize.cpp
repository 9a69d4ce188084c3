#include "spnet/builders.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "spnet/predicates.hpp"

namespace spnet {

namespace {

struct Segment {
  VertexId a, b;
  bool from_line;
};

// Candidate crossing pairs (i < j) from a bucket grid over segment bounding boxes.
std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(const std::vector<Vertex>& verts,
                                                                 const std::vector<Segment>& segs,
                                                                 const Window& window) {
  const std::size_t m = segs.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (m < 2) return out;
  double total = 0;
  for (const auto& s : segs) total += distance(verts[s.a].pos, verts[s.b].pos);
  const double mean_len = total / static_cast<double>(m);
  const double side = window.side();
  const std::size_t cols = std::clamp<std::size_t>(
      static_cast<std::size_t>(side / std::max(mean_len, side / 1024.0)), 1, 1024);
  const double cell = side / static_cast<double>(cols);
  auto cell_of = [&](double v) {
    const double c = std::floor(v / cell);
    if (!(c > 0)) return std::size_t{0};
    return std::min(cols - 1, static_cast<std::size_t>(c));
  };
  std::vector<std::vector<std::size_t>> buckets(cols * cols);
  for (std::size_t k = 0; k < m; ++k) {
    const Point& p = verts[segs[k].a].pos;
    const Point& q = verts[segs[k].b].pos;
    const std::size_t x0 = cell_of(std::min(p.x, q.x)), x1 = cell_of(std::max(p.x, q.x));
    const std::size_t y0 = cell_of(std::min(p.y, q.y)), y1 = cell_of(std::max(p.y, q.y));
    for (std::size_t y = y0; y <= y1; ++y) {
      for (std::size_t x = x0; x <= x1; ++x) buckets[y * cols + x].push_back(k);
    }
  }
  for (const auto& b : buckets) {
    for (std::size_t u = 0; u < b.size(); ++u) {
      for (std::size_t w = u + 1; w < b.size(); ++w) out.emplace_back(b[u], b[w]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <typename ShouldSplit>
Network split_crossings(const ConfigPtr& config, FamilyTag tag, std::vector<Vertex> verts,
                        const std::vector<Segment>& segs, ShouldSplit should_split) {
  const std::size_t n_city = config->size();
  // Split points per segment: (parameter along segment, vertex id).
  std::vector<std::vector<std::pair<double, VertexId>>> cuts(segs.size());
  for (const auto& [i, j] : candidate_pairs(verts, segs, config->window)) {
    const Segment& s = segs[i];
    const Segment& t = segs[j];
    if (!should_split(s, t)) continue;
    const Point a = verts[s.a].pos, b = verts[s.b].pos, c = verts[t.a].pos, d = verts[t.b].pos;
    if (!segments_cross(a, b, c, d)) continue;
    const double rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
    const double denom = rx * sy - ry * sx;
    const double ts = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
    const double tt = ((c.x - a.x) * ry - (c.y - a.y) * rx) / denom;
    const auto id = static_cast<VertexId>(verts.size());
    verts.push_back({{a.x + ts * rx, a.y + ts * ry}, VertexKind::junction, std::nullopt});
    cuts[i].emplace_back(ts, id);
    cuts[j].emplace_back(tt, id);
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    auto& c = cuts[k];
    std::sort(c.begin(), c.end());
    VertexId prev = segs[k].a;
    for (const auto& [t, v] : c) {
      pairs.emplace_back(prev, v);
      prev = v;
    }
    pairs.emplace_back(prev, segs[k].b);
  }
  std::vector<Vertex> extra(verts.begin() + static_cast<std::ptrdiff_t>(n_city), verts.end());
  return Network(config, std::move(tag), std::move(extra), std::move(pairs));
}

std::vector<Vertex> all_vertices(const Network& net) { return {net.vertices().begin(), net.vertices().end()}; }

}  // namespace

Network overlay_lines(const Network& base, std::span<const Line> lines) {
  FamilyTag tag = base.tag();
  tag.params["lines"] = static_cast<double>(lines.size());
  if (lines.empty()) return base.with_tag(std::move(tag));
  std::vector<Vertex> verts = all_vertices(base);
  std::vector<Segment> segs;
  for (const auto& e : base.edges()) segs.push_back({e.u, e.v, false});
  for (const auto& line : lines) {
    Point a, b;
    if (!clip_line(base.config().window, line, a, b)) continue;
    const auto ia = static_cast<VertexId>(verts.size());
    verts.push_back({a, VertexKind::boundary_anchor, std::nullopt});
    verts.push_back({b, VertexKind::boundary_anchor, std::nullopt});
    segs.push_back({ia, ia + 1, true});
  }
  return split_crossings(base.config_ptr(), std::move(tag), std::move(verts), segs,
                         [](const Segment& s, const Segment& t) { return s.from_line || t.from_line; });
}

Network planarize(const Network& net) {
  std::vector<Segment> segs;
  for (const auto& e : net.edges()) segs.push_back({e.u, e.v, false});
  return split_crossings(net.config_ptr(), net.tag(), all_vertices(net), segs,
                         [](const Segment&, const Segment&) { return true; });
}

std::size_t count_crossings(const Network& net) {
  const std::vector<Vertex> verts = all_vertices(net);
  std::vector<Segment> segs;
  for (const auto& e : net.edges()) segs.push_back({e.u, e.v, false});
  std::size_t count = 0;
  for (const auto& [i, j] : candidate_pairs(verts, segs, net.config().window)) {
    if (segments_cross(verts[segs[i].a].pos, verts[segs[i].b].pos, verts[segs[j].a].pos, verts[segs[j].b].pos)) {
      ++count;
    }
  }
  return count;
}

}  // namespace spnet
