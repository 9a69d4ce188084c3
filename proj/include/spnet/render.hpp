#pragma once

#include <string>

#include "spnet/network.hpp"

namespace spnet {

struct RenderStyle {
  double width_px = 800.0;
  /// Radii and stroke in window units.
  double city_radius = 0.12;
  double junction_radius = 0.0;
  double stroke_width = 0.05;
  std::string edge_color = "#222";
  std::string city_color = "#c00";
};

/// SVG with viewBox equal to the window, north up. One <line> per edge and one
/// <circle> per city, in network order; output depends only on the inputs.
std::string render_svg(const Network& net, const RenderStyle& style = {});

}  // namespace spnet
