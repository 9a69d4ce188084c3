#pragma once

namespace spnet {

struct Point;

/// Sign of the orientation determinant: +1 if c lies left of a->b, -1 if right, 0 if collinear.
/// Evaluated in double with a static error bound and recomputed exactly when the bound is not met.
int orient2d(const Point& a, const Point& b, const Point& c);

/// +1 if d lies strictly inside the circle through a, b, c (counter-clockwise), -1 outside, 0 on it.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

/// True when segments (a,b) and (c,d) cross at a single point interior to both.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace spnet
