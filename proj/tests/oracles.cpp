#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace oracle {

using spnet::Point;
using spnet::VertexId;

namespace {

double d2(const Point& a, const Point& b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); }

}  // namespace

Pairs mst(const std::vector<Point>& p) {
  const std::size_t n = p.size();
  Pairs out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double lim = d2(p[i], p[j]);
      std::vector<char> seen(n, 0);
      std::vector<std::size_t> stack{i};
      seen[i] = 1;
      while (!stack.empty()) {
        const std::size_t a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < n; ++b) {
          if (!seen[b] && d2(p[a], p[b]) < lim) {
            seen[b] = 1;
            stack.push_back(b);
          }
        }
      }
      if (!seen[j]) out.emplace_back(i, j);
    }
  }
  return out;
}

Pairs beta_skeleton(const std::vector<Point>& p, double beta) {
  const std::size_t n = p.size();
  Pairs out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& a = p[i];
      const Point& b = p[j];
      const double d = std::sqrt(d2(a, b));
      Point c1, c2;
      double r;
      if (beta >= 1) {
        // Lune: discs of radius beta*d/2 centred on the segment's line.
        r = beta * d / 2;
        c1 = {(1 - beta / 2) * a.x + beta / 2 * b.x, (1 - beta / 2) * a.y + beta / 2 * b.y};
        c2 = {beta / 2 * a.x + (1 - beta / 2) * b.x, beta / 2 * a.y + (1 - beta / 2) * b.y};
      } else {
        // Two circles of radius d/(2 beta) through a and b.
        r = d / (2 * beta);
        const double h = std::sqrt(r * r - d * d / 4);
        const Point m{(a.x + b.x) / 2, (a.y + b.y) / 2};
        const Point nrm{-(b.y - a.y) / d, (b.x - a.x) / d};
        c1 = {m.x + h * nrm.x, m.y + h * nrm.y};
        c2 = {m.x - h * nrm.x, m.y - h * nrm.y};
      }
      const double r2 = r * r * (1 - 1e-10);
      bool empty = true;
      for (std::size_t k = 0; k < n && empty; ++k) {
        if (k == i || k == j) continue;
        if (d2(p[k], c1) < r2 && d2(p[k], c2) < r2) empty = false;
      }
      if (empty) out.emplace_back(i, j);
    }
  }
  return out;
}

Pairs delaunay(const std::vector<Point>& p) {
  const std::size_t n = p.size();
  Pairs out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point m{(p[i].x + p[j].x) / 2, (p[i].y + p[j].y) / 2};
      const Point nv{-(p[j].y - p[i].y), p[j].x - p[i].x};
      // k is strictly inside the circle centred at m + t*nv through p[i] iff
      // a + 2 t b < 0, a = |m-k|^2 - |m-p_i|^2, b = nv.(p_i - k).
      double lo = -std::numeric_limits<double>::infinity();
      double hi = std::numeric_limits<double>::infinity();
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        if (k == i || k == j) continue;
        const double a = d2(m, p[k]) - d2(m, p[i]);
        const double b = nv.x * (p[i].x - p[k].x) + nv.y * (p[i].y - p[k].y);
        if (b > 0) {
          lo = std::max(lo, -a / (2 * b));
        } else if (b < 0) {
          hi = std::min(hi, -a / (2 * b));
        } else if (a < 0) {
          ok = false;
        }
      }
      if (ok && lo <= hi) out.emplace_back(i, j);
    }
  }
  return out;
}

Pairs gp(const std::vector<Point>& p, double power) {
  const std::size_t n = p.size();
  std::vector<std::vector<double>> w(n, std::vector<double>(n)), dist;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = std::pow(std::sqrt(d2(p[i], p[j])), power);
  }
  dist = w;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
    }
  }
  Pairs out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist[i][j] >= w[i][j] * (1 - 1e-9)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::vector<double>> all_pairs_routes(const spnet::Network& net) {
  const std::size_t n = net.vertex_count();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, inf));
  for (std::size_t s = 0; s < n; ++s) {
    dist[s][s] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& e : net.edges()) {
        if (dist[s][e.u] + e.length < dist[s][e.v]) {
          dist[s][e.v] = dist[s][e.u] + e.length;
          changed = true;
        }
        if (dist[s][e.v] + e.length < dist[s][e.u]) {
          dist[s][e.u] = dist[s][e.v] + e.length;
          changed = true;
        }
      }
    }
  }
  return dist;
}

std::vector<Point> random_points(std::size_t n, double side, unsigned long long seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, side);
  std::vector<Point> pts(n);
  for (auto& q : pts) {
    q.x = u(gen);
    q.y = u(gen);
  }
  return pts;
}

}  // namespace oracle
