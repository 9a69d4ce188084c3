#include "spnet/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spnet {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::ifstream open_in(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  return in;
}

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

void expect_header(std::istream& in, const std::string& header, const fs::path& p) {
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw std::runtime_error(p.string() + ": expected header '" + header + "'");
}

std::size_t parse_size(const std::string& s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::runtime_error("bad integer: " + s);
  return v;
}

json config_json(const PointConfig& c) {
  json j;
  j["schema"] = kSchemaVersion;
  j["model"] = to_string(c.model);
  j["n"] = c.size();
  j["side"] = c.window.side();
  j["seed"] = c.seed;
  j["hash"] = std::to_string(config_hash(c));
  return j;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::runtime_error("bad number: " + s);
  return v;
}

json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

double json_to_double(const json& j) {
  if (j.is_string()) return parse_double(j.get<std::string>());
  return j.get<double>();
}

fs::path sidecar_path(const fs::path& csv_path) {
  fs::path p = csv_path;
  p += ".json";
  return p;
}

void write_points(const PointConfig& config, const fs::path& csv_path) {
  {
    auto out = open_out(csv_path);
    out << "id,x,y\n";
    for (std::size_t i = 0; i < config.size(); ++i) {
      out << i << ',' << format_double(config.points[i].x) << ',' << format_double(config.points[i].y) << '\n';
    }
  }
  write_text(sidecar_path(csv_path), config_json(config).dump(2));
}

PointConfig read_points(const fs::path& csv_path) {
  const json meta = json::parse(read_text(sidecar_path(csv_path)));
  PointConfig cfg;
  cfg.window = Window(meta.at("side").get<double>());
  cfg.seed = meta.at("seed").get<std::uint64_t>();
  cfg.model = point_model_from_string(meta.at("model").get<std::string>());
  auto in = open_in(csv_path);
  expect_header(in, "id,x,y", csv_path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv(line);
    if (f.size() != 3) throw std::runtime_error(csv_path.string() + ": bad row '" + line + "'");
    if (parse_size(f[0]) != cfg.points.size()) throw std::runtime_error(csv_path.string() + ": ids must be 0..n-1");
    cfg.points.push_back({parse_double(f[1]), parse_double(f[2])});
  }
  if (cfg.points.size() != meta.at("n").get<std::size_t>()) {
    throw std::runtime_error(csv_path.string() + ": row count does not match sidecar n");
  }
  if (meta.contains("hash") && meta["hash"].get<std::string>() != std::to_string(config_hash(cfg))) {
    throw std::runtime_error(csv_path.string() + ": content hash does not match sidecar");
  }
  return cfg;
}

json to_json(const FamilyTag& tag) {
  json j;
  j["label"] = tag.label;
  j["params"] = json::object();
  for (const auto& [k, v] : tag.params) j["params"][k] = json_number(v);
  return j;
}

void write_network(const Network& net, const fs::path& dir, std::uint64_t seed) {
  fs::create_directories(dir);
  {
    auto out = open_out(dir / "vertices.csv");
    out << "id,x,y,kind,cityId\n";
    for (std::size_t i = 0; i < net.vertex_count(); ++i) {
      const Vertex& v = net.vertices()[i];
      out << i << ',' << format_double(v.pos.x) << ',' << format_double(v.pos.y) << ',' << to_string(v.kind) << ',';
      if (v.city_id) out << *v.city_id;
      out << '\n';
    }
  }
  {
    auto out = open_out(dir / "edges.csv");
    out << "u,v,length\n";
    for (const auto& e : net.edges()) out << e.u << ',' << e.v << ',' << format_double(e.length) << '\n';
  }
  json m;
  m["schema"] = kSchemaVersion;
  m["familyTag"] = to_json(net.tag());
  m["seed"] = seed;
  m["sourceConfig"] = config_json(net.config());
  m["vertices"] = net.vertex_count();
  m["edges"] = net.edge_count();
  write_text(dir / "manifest.json", m.dump(2));
}

Network read_network(const fs::path& dir) {
  const json m = json::parse(read_text(dir / "manifest.json"));
  const json& src = m.at("sourceConfig");
  PointConfig cfg;
  cfg.window = Window(src.at("side").get<double>());
  cfg.seed = src.at("seed").get<std::uint64_t>();
  cfg.model = point_model_from_string(src.at("model").get<std::string>());
  const std::size_t n = src.at("n").get<std::size_t>();

  std::vector<Vertex> extra;
  {
    auto in = open_in(dir / "vertices.csv");
    expect_header(in, "id,x,y,kind,cityId", dir / "vertices.csv");
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto f = split_csv(line);
      if (f.size() != 5 || parse_size(f[0]) != row) throw std::runtime_error("vertices.csv: bad row '" + line + "'");
      const Point p{parse_double(f[1]), parse_double(f[2])};
      const VertexKind kind = vertex_kind_from_string(f[3]);
      if (row < n) {
        if (kind != VertexKind::city || parse_size(f[4]) != row) {
          throw std::runtime_error("vertices.csv: the first n vertices must be the cities in order");
        }
        cfg.points.push_back(p);
      } else {
        extra.push_back({p, kind, std::nullopt});
      }
      ++row;
    }
  }
  if (cfg.points.size() != n) throw std::runtime_error("vertices.csv: fewer city rows than manifest n");

  std::vector<std::pair<VertexId, VertexId>> pairs;
  {
    auto in = open_in(dir / "edges.csv");
    expect_header(in, "u,v,length", dir / "edges.csv");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto f = split_csv(line);
      if (f.size() != 3) throw std::runtime_error("edges.csv: bad row '" + line + "'");
      pairs.emplace_back(static_cast<VertexId>(parse_size(f[0])), static_cast<VertexId>(parse_size(f[1])));
    }
  }
  FamilyTag tag;
  tag.label = m.at("familyTag").at("label").get<std::string>();
  for (const auto& [k, v] : m.at("familyTag").at("params").items()) tag.params[k] = json_to_double(v);
  return Network(share(std::move(cfg)), std::move(tag), std::move(extra), std::move(pairs));
}

void write_profile(std::ostream& os, const RhoProfile& profile) {
  os << "d_center,count,mean_ratio,max_ratio\n";
  for (const auto& b : profile.bins) {
    os << format_double(b.center) << ',' << b.count << ',';
    if (b.mean_ratio) os << format_double(*b.mean_ratio);
    os << ',' << format_double(b.max_ratio) << '\n';
  }
}

void write_profile(const RhoProfile& profile, const fs::path& path) {
  auto out = open_out(path);
  write_profile(out, profile);
}

json to_json(const NetSummary& s) {
  json j;
  j["schema"] = kSchemaVersion;
  j["L"] = json_number(s.length);
  j["L_inner"] = json_number(s.length_inner);
  j["avgDegree"] = json_number(s.avg_degree);
  j["rTilde"] = json_number(s.r_tilde);
  j["rMax"] = json_number(s.r_max);
  j["rAve"] = json_number(s.r_ave);
  j["unreachableFraction"] = json_number(s.unreachable_fraction);
  j["unboundedSuspected"] = s.unbounded_suspected;
  j["pairs"] = s.pair_count;
  return j;
}

void write_text(const fs::path& path, const std::string& text) {
  auto out = open_out(path);
  out << text << '\n';
}

std::string read_text(const fs::path& path) {
  auto in = open_in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace spnet
