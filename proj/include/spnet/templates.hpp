#pragma once

#include "spnet/geometry.hpp"

namespace spnet {

enum class TemplateRegime { lens_small_beta, lens_large_beta };

/// A beta-skeleton template in the canonical frame where the two endpoints sit
/// at (-1/2, 0) and (1/2, 0). The region is the intersection of two open discs
/// with centres (+-cx, +-cy) and common radius.
class Template {
 public:
  double beta() const { return beta_; }
  TemplateRegime regime() const { return regime_; }
  double area() const { return area_; }
  double radius() const { return radius_; }
  /// Centre of the first disc; the second is its reflection through the origin.
  Point disc_center() const { return center_; }
  /// Half extents of the region's bounding box in canonical units.
  double half_width() const { return half_w_; }
  double half_height() const { return half_h_; }

  /// Membership of a canonical-frame point in the open region.
  bool contains_canonical(const Point& u) const;

  friend Template beta_template(double beta);
  friend Template beta_template(double beta, TemplateRegime regime);

 private:
  double beta_ = 1.0;
  TemplateRegime regime_ = TemplateRegime::lens_large_beta;
  double radius_ = 0.5;
  Point center_{0, 0};
  double area_ = 0.0;
  double half_w_ = 0.5;
  double half_h_ = 0.5;
};

/// Beta-skeleton template, 0 < beta <= 2. Throws std::invalid_argument otherwise.
Template beta_template(double beta);
/// Same, forcing one of the two parameterizations (they coincide at beta = 1).
Template beta_template(double beta, TemplateRegime regime);

double template_area(double beta);

/// Canonical coordinates of z in the frame taking (x, y) to (-1/2,0), (1/2,0).
Point to_canonical(const Point& x, const Point& y, const Point& z);

/// True iff z lies in the open region A(x, y).
bool template_contains(const Template& t, const Point& x, const Point& y, const Point& z);

}  // namespace spnet
