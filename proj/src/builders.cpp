#include "spnet/builders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "spnet/parallel.hpp"
#include "spnet/rng.hpp"

namespace spnet {

namespace {

using PairList = std::vector<std::pair<VertexId, VertexId>>;

double density_cell(const PointConfig& cfg) {
  const double n = std::max<double>(1.0, static_cast<double>(cfg.size()));
  return cfg.window.side() / std::ceil(std::sqrt(n));
}

PairList all_pairs(std::size_t n) {
  PairList out;
  out.reserve(n * (n - 1) / 2);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

// Axis-aligned bounding box of the region A(x, y) for a template.
struct Box {
  double x0, y0, x1, y1;
};

Box template_box(const Template& t, const Point& x, const Point& y) {
  const double d = distance(x, y);
  const double c = std::abs(y.x - x.x) / d, s = std::abs(y.y - x.y) / d;
  const double hw = t.half_width() * d, hh = t.half_height() * d;
  const double ex = c * hw + s * hh, ey = s * hw + c * hh;
  const Point m = midpoint(x, y);
  return {m.x - ex, m.y - ey, m.x + ex, m.y + ey};
}

class BlockerSearch {
 public:
  BlockerSearch(const PointConfig& cfg, const Template& t)
      : pts_(cfg.points), t_(t), grid_(cfg.points, cfg.window, density_cell(cfg)) {}

  /// True when some city other than i, j lies inside A(p_i, p_j).
  bool blocked(std::size_t i, std::size_t j) const {
    const Point& a = pts_[i];
    const Point& b = pts_[j];
    auto test = [&](std::size_t k) { return k == i || k == j || !template_contains(t_, a, b, pts_[k]); };
    // Blockers cluster near the midpoint; look there before sweeping the full box.
    const Point m = midpoint(a, b);
    const double h = grid_.cell_side();
    const Box box = template_box(t_, a, b);
    const Box near{std::max(box.x0, m.x - h), std::max(box.y0, m.y - h), std::min(box.x1, m.x + h),
                   std::min(box.y1, m.y + h)};
    if (!grid_.visit_cells(near.x0, near.y0, near.x1, near.y1, test)) return true;
    return !grid_.visit_cells(box.x0, box.y0, box.x1, box.y1, test);
  }

 private:
  std::span<const Point> pts_;
  const Template& t_;
  GridIndex grid_;
};

}  // namespace

Network build_geometric(const ConfigPtr& config, double c) {
  if (!(c > 0)) throw std::invalid_argument("build_geometric: c must be positive");
  const auto& pts = config->points;
  PairList pairs;
  const GridIndex grid(pts, config->window, std::max(c, density_cell(*config)));
  const double c2 = c * c;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    grid.visit_cells(p.x - c, p.y - c, p.x + c, p.y + c, [&](std::size_t j) {
      if (j > i && distance_sq(p, pts[j]) <= c2) pairs.emplace_back(i, j);
      return true;
    });
  }
  return Network(config, {"geometric", {{"c", c}}}, std::move(pairs));
}

Network build_k_neighbor(const ConfigPtr& config, std::size_t k) {
  const auto& pts = config->points;
  const std::size_t n = pts.size();
  if (k < 1 || k >= n) throw std::invalid_argument("build_k_neighbor: need 1 <= K < n");
  const GridIndex grid(pts, config->window, density_cell(*config));
  const double h = grid.cell_side();
  PairList pairs;
  std::vector<std::pair<double, std::size_t>> cand;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = pts[i];
    // Grow a square search until the K-th nearest is closer than the covered radius.
    for (double r = h;; r *= 2) {
      cand.clear();
      grid.visit_cells(p.x - r, p.y - r, p.x + r, p.y + r, [&](std::size_t j) {
        if (j != i) cand.emplace_back(distance_sq(p, pts[j]), j);
        return true;
      });
      const bool covers_all = r >= config->window.side() * std::numbers::sqrt2;
      if (cand.size() >= k) {
        std::nth_element(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k - 1), cand.end());
        if (cand[k - 1].first <= r * r || covers_all) break;
      } else if (covers_all) {
        break;
      }
    }
    std::sort(cand.begin(), cand.end());
    for (std::size_t m = 0; m < k && m < cand.size(); ++m) pairs.emplace_back(i, cand[m].second);
  }
  return Network(config, {"k-neighbor", {{"K", static_cast<double>(k)}}}, std::move(pairs));
}

Network build_mst(const ConfigPtr& config) {
  const auto& pts = config->points;
  const std::size_t n = pts.size();
  if (n == 0) throw std::invalid_argument("build_mst: empty configuration");
  PairList pairs;
  pairs.reserve(n - 1);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, 0);
  std::vector<char> in_tree(n, 0);
  std::size_t cur = 0;
  in_tree[0] = 1;
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t next = n;
    double next_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      const double d = distance_sq(pts[cur], pts[j]);
      if (d < best[j]) {
        best[j] = d;
        parent[j] = cur;
      }
      if (best[j] < next_d) {
        next_d = best[j];
        next = j;
      }
    }
    in_tree[next] = 1;
    pairs.emplace_back(parent[next], next);
    cur = next;
  }
  return Network(config, {"mst", {}}, std::move(pairs));
}

Network build_delaunay(const ConfigPtr& config) {
  return Network(config, {"delaunay", {}}, delaunay_edges(config->points));
}

Network build_proximity(const ConfigPtr& config, const Template& t) {
  const auto& pts = config->points;
  const std::size_t n = pts.size();
  const BlockerSearch search(*config, t);
  PairList candidates;
  bool have_delaunay = false;
  if (t.beta() >= 1 && n >= 3) {
    try {
      candidates = delaunay_edges(pts);
      have_delaunay = true;
    } catch (const DegenerateConfiguration&) {
    }
  }
  if (!have_delaunay) candidates = all_pairs(n);
  PairList pairs;
  for (const auto& [i, j] : candidates) {
    if (!search.blocked(i, j)) pairs.emplace_back(i, j);
  }
  FamilyTag tag{"beta", {{"beta", t.beta()}}};
  return Network(config, std::move(tag), std::move(pairs));
}

Network build_gp(const ConfigPtr& config, double p, unsigned workers) {
  if (!(p >= 1)) throw std::invalid_argument("build_gp: p must be >= 1");
  const auto& pts = config->points;
  const std::size_t n = pts.size();
  std::vector<double> cost(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = std::pow(distance(pts[i], pts[j]), p);
  }
  std::vector<PairList> per_source(n);
  parallel_for(n, workers, [&](std::size_t s) {
    std::vector<double> dist(cost.begin() + static_cast<std::ptrdiff_t>(s * n),
                             cost.begin() + static_cast<std::ptrdiff_t>((s + 1) * n));
    std::vector<char> done(n, 0);
    done[s] = 1;
    for (std::size_t step = 1; step < n; ++step) {
      std::size_t u = n;
      double du = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j) {
        if (!done[j] && dist[j] < du) {
          du = dist[j];
          u = j;
        }
      }
      done[u] = 1;
      const double* row = &cost[u * n];
      for (std::size_t j = 0; j < n; ++j) {
        if (!done[j] && du + row[j] < dist[j]) dist[j] = du + row[j];
      }
    }
    for (std::size_t j = s + 1; j < n; ++j) {
      // Keep the edge unless some multi-step route is strictly cheaper.
      if (dist[j] >= cost[s * n + j] * (1 - 1e-12)) per_source[s].emplace_back(s, j);
    }
  });
  PairList pairs;
  for (auto& ps : per_source) pairs.insert(pairs.end(), ps.begin(), ps.end());
  return Network(config, {"gp", {{"p", p}}}, std::move(pairs));
}

std::vector<Line> sample_line_process(const Window& window, double intensity, std::uint64_t seed) {
  if (!(intensity >= 0)) throw std::invalid_argument("line intensity must be non-negative");
  Rng rng(seed);
  const double d = window.half_diagonal();
  const std::uint64_t count = rng.poisson(intensity * 2 * d);
  std::vector<Line> lines;
  lines.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    const double angle = rng.uniform() * std::numbers::pi;
    const double offset = rng.uniform(-d, d);
    lines.push_back({angle, offset});
  }
  return lines;
}

bool clip_line(const Window& window, const Line& line, Point& a, Point& b) {
  const Point c = window.center();
  const double nx = std::cos(line.angle), ny = std::sin(line.angle);
  const Point base{c.x + line.offset * nx, c.y + line.offset * ny};
  const double dx = -ny, dy = nx;
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  auto slab = [&](double origin, double dir, double lo, double hi) {
    if (std::abs(dir) < 1e-15) return origin >= lo && origin <= hi;
    double ta = (lo - origin) / dir, tb = (hi - origin) / dir;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    return true;
  };
  if (!slab(base.x, dx, 0, window.side()) || !slab(base.y, dy, 0, window.side())) return false;
  if (!(t1 - t0 > kGeomTol)) return false;
  a = {std::clamp(base.x + t0 * dx, 0.0, window.side()), std::clamp(base.y + t0 * dy, 0.0, window.side())};
  b = {std::clamp(base.x + t1 * dx, 0.0, window.side()), std::clamp(base.y + t1 * dy, 0.0, window.side())};
  return true;
}

Network overlay_line_process(const Network& base, double intensity, std::uint64_t seed) {
  const auto lines = sample_line_process(base.config().window, intensity, seed);
  return overlay_lines(base, lines);
}

}  // namespace spnet
