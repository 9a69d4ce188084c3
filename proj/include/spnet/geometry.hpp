#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spnet {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline double distance_sq(const Point& a, const Point& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline Point midpoint(const Point& a, const Point& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

/// Tolerance used by geometric predicates on normalized coordinates.
inline constexpr double kGeomTol = 1e-12;

/// Square window [0, side]^2.
class Window {
 public:
  explicit Window(double side);

  double side() const { return side_; }
  double area() const { return side_ * side_; }
  double half_diagonal() const { return side_ * std::sqrt(0.5); }
  Point center() const { return {side_ / 2, side_ / 2}; }

  bool contains(const Point& p) const { return p.x >= 0 && p.x <= side_ && p.y >= 0 && p.y <= side_; }
  /// True when p lies in the inner window [m*side, (1-m)*side]^2.
  bool in_inner(const Point& p, double margin_fraction) const;

 private:
  double side_;
};

enum class PointModel { finite_uniform, poisson };

std::string to_string(PointModel m);
PointModel point_model_from_string(const std::string& s);

/// City positions in a square window, in general position.
struct PointConfig {
  Window window{1.0};
  std::vector<Point> points;
  std::uint64_t seed = 0;
  PointModel model = PointModel::finite_uniform;

  std::size_t size() const { return points.size(); }
};

/// n i.i.d. uniform points on [0, sqrt(n)]^2.
PointConfig sample_finite_model(std::size_t n, std::uint64_t seed);

/// Homogeneous Poisson process of the given rate on the window.
PointConfig sample_poisson(const Window& window, double rate, std::uint64_t seed);

/// Radius within which pairwise distance ties are screened by the samplers.
inline constexpr double kTieScreenRadius = 3.0;

/// Indices of points that coincide with an earlier point or take part in a
/// distance tie (within kGeomTol) among pairs closer than kTieScreenRadius.
/// For each offending tie the later-indexed point of the later pair is reported.
std::vector<std::size_t> general_position_violations(std::span<const Point> points, const Window& window);

/// Area of the intersection of two discs.
double lens_area(double r1, double r2, double center_dist);

/// Stable 64-bit hash of a configuration's window and coordinates.
std::uint64_t config_hash(const PointConfig& config);

/// Uniform bucket grid over a window. Immutable after construction.
class GridIndex {
 public:
  GridIndex(std::span<const Point> points, const Window& window, double cell_side);

  /// Indices of points inside the closed rectangle [x0,x1] x [y0,y1], ascending.
  std::vector<std::size_t> query(double x0, double y0, double x1, double y1) const;

  /// Calls fn(index) for each point in cells overlapping the rectangle; fn returns
  /// false to stop early. Points outside the rectangle may be visited.
  template <typename Fn>
  bool visit_cells(double x0, double y0, double x1, double y1, Fn&& fn) const {
    const auto [cx0, cy0] = cell_of(x0, y0);
    const auto [cx1, cy1] = cell_of(x1, y1);
    for (std::size_t cy = cy0; cy <= cy1; ++cy) {
      for (std::size_t cx = cx0; cx <= cx1; ++cx) {
        const std::size_t c = cy * cols_ + cx;
        for (std::size_t k = start_[c]; k < start_[c + 1]; ++k) {
          if (!fn(items_[k])) return false;
        }
      }
    }
    return true;
  }

  std::pair<std::size_t, std::size_t> cell_of(double x, double y) const;
  std::size_t cols() const { return cols_; }
  double cell_side() const { return cell_; }
  std::span<const Point> points() const { return points_; }
  /// Indices stored in one cell.
  std::span<const std::size_t> cell(std::size_t cx, std::size_t cy) const {
    const std::size_t c = cy * cols_ + cx;
    return {items_.data() + start_[c], start_[c + 1] - start_[c]};
  }

 private:
  std::span<const Point> points_;
  double cell_;
  std::size_t cols_;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> items_;
};

}  // namespace spnet
