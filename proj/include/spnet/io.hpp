#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "spnet/builders.hpp"
#include "spnet/metrics.hpp"

namespace spnet {

inline constexpr int kSchemaVersion = 1;

/// Shortest decimal form that round-trips to the same double; "inf", "-inf", "nan" otherwise.
std::string format_double(double v);
double parse_double(const std::string& s);

/// JSON number, or the string "inf"/"nan" for non-finite values.
nlohmann::json json_number(double v);
double json_to_double(const nlohmann::json& j);

/// Points CSV (`id,x,y`) plus a JSON sidecar at `<csv>.json`.
void write_points(const PointConfig& config, const std::filesystem::path& csv_path);
PointConfig read_points(const std::filesystem::path& csv_path);
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

/// Network directory: vertices.csv, edges.csv, manifest.json.
void write_network(const Network& net, const std::filesystem::path& dir, std::uint64_t seed);
Network read_network(const std::filesystem::path& dir);

/// `d_center,count,mean_ratio,max_ratio`; a bin without enough pairs has an empty mean.
void write_profile(std::ostream& os, const RhoProfile& profile);
void write_profile(const RhoProfile& profile, const std::filesystem::path& path);

nlohmann::json to_json(const NetSummary& s);
nlohmann::json to_json(const FamilyTag& tag);

/// Writes text with a trailing newline, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace spnet
