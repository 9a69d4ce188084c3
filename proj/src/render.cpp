#include "spnet/render.hpp"

#include <cstdio>
#include <string>

namespace spnet {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Network& net, const RenderStyle& style) {
  const double side = net.config().window.side();
  std::string out;
  out.reserve(64 * (net.edge_count() + net.vertex_count()) + 256);
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(style.width_px) + "\" height=\"" +
         fmt(style.width_px) + "\" viewBox=\"0 0 " + fmt(side) + " " + fmt(side) + "\">\n";
  out += "<g stroke=\"" + style.edge_color + "\" stroke-width=\"" + fmt(style.stroke_width) +
         "\" stroke-linecap=\"round\">\n";
  for (const auto& e : net.edges()) {
    const Point& a = net.position(e.u);
    const Point& b = net.position(e.v);
    out += "<line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(side - a.y) + "\" x2=\"" + fmt(b.x) + "\" y2=\"" +
           fmt(side - b.y) + "\"/>\n";
  }
  out += "</g>\n<g fill=\"" + style.city_color + "\">\n";
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    const Vertex& vx = net.vertices()[v];
    const double r = vx.kind == VertexKind::city ? style.city_radius : style.junction_radius;
    if (r <= 0) continue;
    out += "<circle cx=\"" + fmt(vx.pos.x) + "\" cy=\"" + fmt(side - vx.pos.y) + "\" r=\"" + fmt(r) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace spnet
