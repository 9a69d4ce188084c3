#include "spnet/geometry.hpp"

#include <algorithm>
#include <bit>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "spnet/rng.hpp"

namespace spnet {

Window::Window(double side) : side_(side) {
  if (!(side > 0) || !std::isfinite(side)) throw std::invalid_argument("window side must be positive and finite");
}

bool Window::in_inner(const Point& p, double margin_fraction) const {
  const double lo = margin_fraction * side_;
  const double hi = side_ - lo;
  return p.x >= lo && p.x <= hi && p.y >= lo && p.y <= hi;
}

std::string to_string(PointModel m) { return m == PointModel::poisson ? "poisson" : "finite-uniform"; }

PointModel point_model_from_string(const std::string& s) {
  if (s == "poisson") return PointModel::poisson;
  if (s == "finite-uniform") return PointModel::finite_uniform;
  throw std::invalid_argument("unknown point model: " + s);
}

namespace {

Point draw_point(Rng& rng, double side) { return {rng.uniform() * side, rng.uniform() * side}; }

// Redraws offending points from the same stream until the configuration is in general position.
void enforce_general_position(std::vector<Point>& pts, const Window& window, Rng& rng) {
  for (;;) {
    const auto bad = general_position_violations(pts, window);
    if (bad.empty()) return;
    for (std::size_t i : bad) pts[i] = draw_point(rng, window.side());
  }
}

}  // namespace

PointConfig sample_finite_model(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_finite_model: n must be positive");
  PointConfig cfg;
  cfg.window = Window(std::sqrt(static_cast<double>(n)));
  cfg.seed = seed;
  cfg.model = PointModel::finite_uniform;
  Rng rng(seed);
  cfg.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cfg.points.push_back(draw_point(rng, cfg.window.side()));
  enforce_general_position(cfg.points, cfg.window, rng);
  return cfg;
}

PointConfig sample_poisson(const Window& window, double rate, std::uint64_t seed) {
  if (!(rate > 0)) throw std::invalid_argument("sample_poisson: rate must be positive");
  PointConfig cfg;
  cfg.window = window;
  cfg.seed = seed;
  cfg.model = PointModel::poisson;
  Rng rng(seed);
  const std::uint64_t count = rng.poisson(rate * window.area());
  cfg.points.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) cfg.points.push_back(draw_point(rng, window.side()));
  enforce_general_position(cfg.points, cfg.window, rng);
  return cfg;
}

std::vector<std::size_t> general_position_violations(std::span<const Point> points, const Window& window) {
  std::vector<std::size_t> bad;
  if (points.size() < 2) return bad;
  const GridIndex grid(points, window, kTieScreenRadius);
  struct PairDist {
    double d;
    std::size_t i, j;
  };
  std::vector<PairDist> pairs;
  const double r2 = kTieScreenRadius * kTieScreenRadius;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    grid.visit_cells(p.x - kTieScreenRadius, p.y - kTieScreenRadius, p.x + kTieScreenRadius,
                     p.y + kTieScreenRadius, [&](std::size_t j) {
                       if (j > i) {
                         const double d2 = distance_sq(p, points[j]);
                         if (d2 < r2) pairs.push_back({std::sqrt(d2), i, j});
                       }
                       return true;
                     });
  }
  for (const auto& pd : pairs) {
    if (pd.d < kGeomTol) bad.push_back(pd.j);
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairDist& a, const PairDist& b) {
    return std::tie(a.d, a.i, a.j) < std::tie(b.d, b.i, b.j);
  });
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (pairs[k].d - pairs[k - 1].d < kGeomTol) {
      bad.push_back(std::max({pairs[k].i, pairs[k].j, pairs[k - 1].i, pairs[k - 1].j}));
    }
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return bad;
}

double lens_area(double r1, double r2, double center_dist) {
  if (!(r1 > 0) || !(r2 > 0) || !(center_dist >= 0)) throw std::invalid_argument("lens_area: bad arguments");
  const double d = center_dist;
  if (d >= r1 + r2) return 0.0;
  const double rmin = std::min(r1, r2);
  if (d <= std::abs(r1 - r2)) return std::numbers::pi * rmin * rmin;
  // Sum of the two circular segments cut off by the common chord.
  const double a1 = std::clamp((d * d + r1 * r1 - r2 * r2) / (2 * d * r1), -1.0, 1.0);
  const double a2 = std::clamp((d * d + r2 * r2 - r1 * r1) / (2 * d * r2), -1.0, 1.0);
  const double k = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
  return r1 * r1 * std::acos(a1) + r2 * r2 * std::acos(a2) - 0.5 * std::sqrt(std::max(0.0, k));
}

std::uint64_t config_hash(const PointConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t w) {
    for (int b = 0; b < 8; ++b) {
      h ^= (w >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(std::bit_cast<std::uint64_t>(config.window.side()));
  mix(config.points.size());
  for (const auto& p : config.points) {
    mix(std::bit_cast<std::uint64_t>(p.x));
    mix(std::bit_cast<std::uint64_t>(p.y));
  }
  return h;
}

GridIndex::GridIndex(std::span<const Point> points, const Window& window, double cell_side)
    : points_(points), cell_(cell_side) {
  if (!(cell_side > 0)) throw std::invalid_argument("GridIndex: cell side must be positive");
  cols_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(window.side() / cell_side)));
  // Keep the bucket array bounded for tiny cells on big windows.
  cols_ = std::min<std::size_t>(cols_, 4096);
  cell_ = window.side() / static_cast<double>(cols_);
  std::vector<std::size_t> cell_ids(points.size());
  start_.assign(cols_ * cols_ + 1, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [cx, cy] = cell_of(points[i].x, points[i].y);
    cell_ids[i] = cy * cols_ + cx;
    ++start_[cell_ids[i] + 1];
  }
  for (std::size_t c = 0; c < cols_ * cols_; ++c) start_[c + 1] += start_[c];
  items_.resize(points.size());
  std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
  for (std::size_t i = 0; i < points.size(); ++i) items_[fill[cell_ids[i]]++] = i;
}

std::pair<std::size_t, std::size_t> GridIndex::cell_of(double x, double y) const {
  auto clampc = [this](double v) {
    const double c = std::floor(v / cell_);
    if (!(c > 0)) return std::size_t{0};
    return std::min(cols_ - 1, static_cast<std::size_t>(c));
  };
  return {clampc(x), clampc(y)};
}

std::vector<std::size_t> GridIndex::query(double x0, double y0, double x1, double y1) const {
  std::vector<std::size_t> out;
  if (x0 > x1 || y0 > y1) return out;
  visit_cells(x0, y0, x1, y1, [&](std::size_t i) {
    const Point& p = points_[i];
    if (p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1) out.push_back(i);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spnet
