#include <doctest.h>

#include <stdexcept>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "spnet/builders.hpp"
#include "spnet/hammersley.hpp"
#include "spnet/io.hpp"
#include "spnet/metrics.hpp"
#include "spnet/render.hpp"

using namespace spnet;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("spnet_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t c = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("doubles round-trip through text") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 12345.678901234567, -0.0}) CHECK(parse_double(format_double(v)) == v);
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(std::isinf(parse_double("inf")));
  CHECK_THROWS(parse_double("1.5x"));
}

TEST_CASE("points round-trip with identical hash") {
  const auto dir = scratch("points");
  const auto cfg = sample_finite_model(300, 12);
  write_points(cfg, dir / "pts.csv");
  const auto back = read_points(dir / "pts.csv");
  CHECK(back.points == cfg.points);
  CHECK(back.seed == cfg.seed);
  CHECK(config_hash(back) == config_hash(cfg));
  std::ifstream in(dir / "pts.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "id,x,y");
}

TEST_CASE("tampered points are rejected") {
  const auto dir = scratch("tamper");
  write_points(sample_finite_model(10, 1), dir / "pts.csv");
  std::string text = read_text(dir / "pts.csv");
  text.replace(text.find('\n') + 3, 1, "9");
  write_text(dir / "pts.csv", text);
  CHECK_THROWS(read_points(dir / "pts.csv"));
}

TEST_CASE("network round-trip") {
  const auto dir = scratch("net");
  const auto cfg = share(sample_finite_model(200, 3));
  const auto net = overlay_line_process(build_mst(cfg), 0.2, 4);
  write_network(net, dir, 4);
  const auto back = read_network(dir);
  CHECK(back.edge_pairs() == net.edge_pairs());
  CHECK(back.vertex_count() == net.vertex_count());
  CHECK(back.tag().label == "mst");
  CHECK(back.tag().params == net.tag().params);
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    CHECK(back.position(v) == net.position(v));
    CHECK(back.vertices()[v].kind == net.vertices()[v].kind);
  }
  CHECK(config_hash(back.config()) == config_hash(net.config()));
  const auto manifest = nlohmann::json::parse(read_text(dir / "manifest.json"));
  CHECK(manifest["schema"] == 1);
}

TEST_CASE("summary JSON writes infinities as strings") {
  NetSummary s;
  s.r_tilde = std::numeric_limits<double>::infinity();
  const auto j = to_json(s);
  CHECK(j["rTilde"] == "inf");
  CHECK(j["schema"] == 1);
}

TEST_CASE("profile CSV") {
  RhoProfile p;
  p.bins = {{0, 0, std::nullopt, 0}, {0.25, 120, 0.5, 1.5}};
  std::ostringstream os;
  write_profile(os, p);
  CHECK(os.str() == "d_center,count,mean_ratio,max_ratio\n0,0,,0\n0.25,120,0.5,1.5\n");
}

TEST_CASE("svg rendering") {
  PointConfig c;
  c.window = Window(10);
  c.points = {{1, 2}, {6, 8}};
  const auto cfg = share(c);
  const auto empty = render_svg(Network(cfg, {"none", {}}, {}));
  CHECK(count(empty, "<line") == 0);
  CHECK(count(empty, "<circle") == 2);
  CHECK(empty.find("viewBox=\"0 0 10.0000 10.0000\"") != std::string::npos);
  const auto one = render_svg(Network(cfg, {"none", {}}, {{0, 1}}));
  CHECK(count(one, "<line") == 1);
  // north up: y is flipped
  CHECK(one.find("x1=\"1.0000\" y1=\"8.0000\" x2=\"6.0000\" y2=\"2.0000\"") != std::string::npos);
  const auto g = build_proximity(share(sample_finite_model(500, 2)), beta_template(1.0));
  const auto svg = render_svg(g);
  CHECK(count(svg, "<line") == g.edge_count());
  CHECK(svg == render_svg(g));
}
