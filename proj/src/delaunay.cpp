#include "spnet/delaunay.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>

#include "spnet/predicates.hpp"

namespace spnet {

namespace {

constexpr int kGhost = -1;

struct Tri {
  std::array<int, 3> v{};   // v[2] == kGhost for ghost triangles
  std::array<int, 3> nb{};  // nb[k] is across the edge opposite v[k]
  bool alive = true;
};

std::uint64_t hilbert_index(std::uint32_t x, std::uint32_t y, int order) {
  std::uint64_t d = 0;
  for (std::uint32_t s = 1u << (order - 1); s > 0; s >>= 1) {
    const std::uint32_t rx = (x & s) ? 1 : 0;
    const std::uint32_t ry = (y & s) ? 1 : 0;
    d += static_cast<std::uint64_t>(s) * s * ((3 * rx) ^ ry);
    if (ry == 0) {
      if (rx == 1) {
        x = s - 1 - (x & (s - 1)) + (x & ~(s - 1));
        y = s - 1 - (y & (s - 1)) + (y & ~(s - 1));
        x &= (s << 1) - 1;
        y &= (s << 1) - 1;
      }
      std::swap(x, y);
    }
  }
  return d;
}

class Triangulator {
 public:
  explicit Triangulator(std::span<const Point> pts) : pts_(pts) {}

  void run() {
    const std::size_t n = pts_.size();
    if (n < 3) throw DegenerateConfiguration("delaunay: need at least 3 points");

    int a = 0, b = -1, c = -1;
    for (std::size_t i = 1; i < n; ++i) {
      if (!(pts_[i] == pts_[0])) {
        b = static_cast<int>(i);
        break;
      }
    }
    if (b < 0) throw DegenerateConfiguration("degenerate configuration: all points coincide");
    for (std::size_t i = 1; i < n; ++i) {
      if (orient2d(pts_[a], pts_[b], pts_[i]) != 0) {
        c = static_cast<int>(i);
        break;
      }
    }
    if (c < 0) throw DegenerateConfiguration("degenerate configuration: all points collinear");
    if (orient2d(pts_[a], pts_[b], pts_[c]) < 0) std::swap(b, c);

    seed_triangle(a, b, c);

    std::vector<int> order;
    order.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int ii = static_cast<int>(i);
      if (ii != a && ii != b && ii != c) order.push_back(ii);
    }
    sort_hilbert(order);
    for (int p : order) insert(p);
  }

  std::vector<std::array<VertexId, 3>> triangles() const {
    std::vector<std::array<VertexId, 3>> out;
    for (const auto& t : tris_) {
      if (t.alive && t.v[2] != kGhost) {
        out.push_back({static_cast<VertexId>(t.v[0]), static_cast<VertexId>(t.v[1]), static_cast<VertexId>(t.v[2])});
      }
    }
    return out;
  }

 private:
  std::span<const Point> pts_;
  std::vector<Tri> tris_;
  std::vector<int> free_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  int last_ = 0;
  std::uint32_t walk_rot_ = 0;

  static bool is_ghost(const Tri& t) { return t.v[2] == kGhost; }

  int new_tri(const std::array<int, 3>& v) {
    int id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
      tris_[id] = Tri{v, {-1, -1, -1}, true};
    } else {
      id = static_cast<int>(tris_.size());
      tris_.push_back(Tri{v, {-1, -1, -1}, true});
      stamp_.push_back(0);
    }
    return id;
  }

  void seed_triangle(int a, int b, int c) {
    const int t0 = new_tri({a, b, c});
    const int g_ab = new_tri({b, a, kGhost});
    const int g_bc = new_tri({c, b, kGhost});
    const int g_ca = new_tri({a, c, kGhost});
    // Link by matching opposite directed edges.
    std::unordered_map<std::uint64_t, std::pair<int, int>> directed;
    auto key = [](int x, int y) {
      return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) | static_cast<std::uint32_t>(y);
    };
    for (int t : {t0, g_ab, g_bc, g_ca}) {
      for (int k = 0; k < 3; ++k) directed[key(tris_[t].v[(k + 1) % 3], tris_[t].v[(k + 2) % 3])] = {t, k};
    }
    for (int t : {t0, g_ab, g_bc, g_ca}) {
      for (int k = 0; k < 3; ++k) {
        const auto it = directed.find(key(tris_[t].v[(k + 2) % 3], tris_[t].v[(k + 1) % 3]));
        tris_[t].nb[k] = it->second.first;
      }
    }
    last_ = t0;
  }

  void sort_hilbert(std::vector<int>& order) const {
    double minx = pts_[0].x, maxx = minx, miny = pts_[0].y, maxy = miny;
    for (const auto& p : pts_) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
    const double span = std::max({maxx - minx, maxy - miny, 1e-300});
    constexpr int kOrder = 16;
    const double scale = ((1u << kOrder) - 1) / span;
    std::vector<std::pair<std::uint64_t, int>> keyed;
    keyed.reserve(order.size());
    for (int i : order) {
      const auto hx = static_cast<std::uint32_t>((pts_[i].x - minx) * scale);
      const auto hy = static_cast<std::uint32_t>((pts_[i].y - miny) * scale);
      keyed.emplace_back(hilbert_index(hx, hy, kOrder), i);
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = keyed[k].second;
  }

  bool in_conflict(const Tri& t, const Point& p) const {
    if (!is_ghost(t)) return incircle(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]], p) > 0;
    const Point& u = pts_[t.v[0]];
    const Point& w = pts_[t.v[1]];
    const int o = orient2d(u, w, p);
    if (o > 0) return true;
    if (o < 0) return false;
    // On the hull line: conflicts only when strictly inside the hull edge.
    const double d1 = (p.x - u.x) * (w.x - u.x) + (p.y - u.y) * (w.y - u.y);
    const double d2 = (p.x - w.x) * (u.x - w.x) + (p.y - w.y) * (u.y - w.y);
    return d1 > 0 && d2 > 0;
  }

  int locate(const Point& p) {
    int t = last_;
    if (!tris_[t].alive || is_ghost(tris_[t])) {
      t = 0;
      while (!tris_[t].alive || is_ghost(tris_[t])) ++t;
    }
    for (;;) {
      const Tri& tri = tris_[t];
      if (is_ghost(tri)) return t;
      bool moved = false;
      const std::uint32_t rot = walk_rot_++ % 3;
      for (std::uint32_t j = 0; j < 3; ++j) {
        const int k = static_cast<int>((j + rot) % 3);
        const Point& a = pts_[tri.v[(k + 1) % 3]];
        const Point& b = pts_[tri.v[(k + 2) % 3]];
        if (orient2d(a, b, p) < 0) {
          t = tri.nb[k];
          moved = true;
          break;
        }
      }
      if (!moved) return t;
    }
  }

  void insert(int pi) {
    const Point& p = pts_[pi];
    const int start = locate(p);
    if (!in_conflict(tris_[start], p)) throw DegenerateConfiguration("degenerate configuration: duplicate point");

    ++epoch_;
    struct Boundary {
      int a, b, outside;
    };
    std::vector<int> cavity{start};
    std::vector<Boundary> boundary;
    stamp_[start] = epoch_;
    for (std::size_t q = 0; q < cavity.size(); ++q) {
      const int t = cavity[q];
      for (int k = 0; k < 3; ++k) {
        const int nb = tris_[t].nb[k];
        if (stamp_[nb] == epoch_) continue;
        if (in_conflict(tris_[nb], p)) {
          stamp_[nb] = epoch_;
          cavity.push_back(nb);
        } else {
          boundary.push_back({tris_[t].v[(k + 1) % 3], tris_[t].v[(k + 2) % 3], nb});
        }
      }
    }

    for (int t : cavity) {
      tris_[t].alive = false;
      free_.push_back(t);
    }

    // New triangle per boundary edge: (a, b, p), rotated so a ghost vertex sits last.
    std::unordered_map<int, int> by_start;  // boundary edge start vertex -> new triangle
    std::unordered_map<int, int> by_end;
    std::vector<int> created;
    created.reserve(boundary.size());
    for (const auto& e : boundary) {
      std::array<int, 3> v{e.a, e.b, pi};
      std::array<int, 3> nb{-1, -1, e.outside};
      if (e.a == kGhost) {
        v = {e.b, pi, kGhost};
        nb = {-1, e.outside, -1};
      } else if (e.b == kGhost) {
        v = {pi, e.a, kGhost};
        nb = {e.outside, -1, -1};
      }
      const int t = new_tri(v);
      tris_[t].nb = nb;
      // Repoint the outside triangle across the shared edge.
      Tri& out = tris_[e.outside];
      for (int k = 0; k < 3; ++k) {
        const int x = out.v[(k + 1) % 3], y = out.v[(k + 2) % 3];
        if (x == e.b && y == e.a) {
          out.nb[k] = t;
          break;
        }
      }
      by_start[e.a] = t;
      by_end[e.b] = t;
      created.push_back(t);
    }
    // Link new triangles around p: each edge (p, x) is shared by the triangle
    // whose boundary edge ends at x and the one whose boundary edge starts at x.
    for (int t : created) {
      Tri& tri = tris_[t];
      for (int k = 0; k < 3; ++k) {
        if (tri.nb[k] != -1) continue;
        const int x = tri.v[(k + 1) % 3], y = tri.v[(k + 2) % 3];
        // Directed edge x->y in t; neighbor holds y->x.
        tri.nb[k] = (x == pi) ? by_end.at(y) : by_start.at(x);
      }
      if (!is_ghost(tri)) last_ = t;
    }
  }
};

}  // namespace

std::vector<std::array<VertexId, 3>> delaunay_triangles(std::span<const Point> points) {
  Triangulator tr(points);
  tr.run();
  return tr.triangles();
}

std::vector<std::pair<VertexId, VertexId>> delaunay_edges(std::span<const Point> points) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& t : delaunay_triangles(points)) {
    for (int k = 0; k < 3; ++k) {
      VertexId a = t[k], b = t[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      edges.emplace_back(a, b);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace spnet
