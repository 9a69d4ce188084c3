#include "spnet/templates.hpp"

#include <stdexcept>

namespace spnet {

namespace {

void check_beta(double beta) {
  if (!(beta > 0 && beta <= 2)) throw std::invalid_argument("beta must lie in (0, 2]");
}

}  // namespace

Template beta_template(double beta, TemplateRegime regime) {
  check_beta(beta);
  Template t;
  t.beta_ = beta;
  t.regime_ = regime;
  if (regime == TemplateRegime::lens_large_beta) {
    if (beta < 1) throw std::invalid_argument("large-beta parameterization needs beta >= 1");
    t.radius_ = beta / 2;
    t.center_ = {(beta - 1) / 2, 0};
    // Discs centred on the x axis; the lens spans [-1/2, 1/2] horizontally.
    t.half_w_ = t.radius_ - t.center_.x;
    t.half_h_ = std::sqrt(t.radius_ * t.radius_ - t.center_.x * t.center_.x);
  } else {
    if (beta > 1) throw std::invalid_argument("small-beta parameterization needs beta <= 1");
    t.radius_ = 1 / (2 * beta);
    t.center_ = {0, std::sqrt(std::max(0.0, t.radius_ * t.radius_ - 0.25))};
    t.half_w_ = 0.5;
    t.half_h_ = t.radius_ - t.center_.y;
  }
  t.area_ = template_area(beta);
  return t;
}

Template beta_template(double beta) {
  check_beta(beta);
  return beta_template(beta, beta >= 1 ? TemplateRegime::lens_large_beta : TemplateRegime::lens_small_beta);
}

double template_area(double beta) {
  check_beta(beta);
  if (beta >= 1) return lens_area(beta / 2, beta / 2, beta - 1);
  const double r = 1 / (2 * beta);
  return lens_area(r, r, 2 * std::sqrt(r * r - 0.25));
}

bool Template::contains_canonical(const Point& u) const {
  const double r2 = radius_ * radius_ - kGeomTol;
  const Point c1 = center_;
  const Point c2{-center_.x, -center_.y};
  return distance_sq(u, c1) < r2 && distance_sq(u, c2) < r2;
}

Point to_canonical(const Point& x, const Point& y, const Point& z) {
  const double dx = y.x - x.x, dy = y.y - x.y;
  const double len2 = dx * dx + dy * dy;
  const Point m = midpoint(x, y);
  const double px = z.x - m.x, py = z.y - m.y;
  // Rotate by -angle(x->y) and scale by 1/|xy|.
  return {(px * dx + py * dy) / len2, (-px * dy + py * dx) / len2};
}

bool template_contains(const Template& t, const Point& x, const Point& y, const Point& z) {
  return t.contains_canonical(to_canonical(x, y, z));
}

}  // namespace spnet
