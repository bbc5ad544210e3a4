#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "csest/estimators.hpp"
#include "csest/lower_bound.hpp"
#include "csest/sampling.hpp"

namespace csest::io {

// Shortest text that round-trips: "{:.17g}".
std::string format_double(double v);

// CSV with two numeric columns and an optional `x,y` header. Blank lines are
// skipped. Throws ParseError naming the offending line.
std::vector<geom2d::Point2> parse_points(std::string_view text);
std::vector<geom2d::Point2> read_points(const std::filesystem::path& path);

std::string points_csv(std::span<const geom2d::Point2> pts);
void write_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

nlohmann::json to_json(const geom2d::ConvexPolygon& p);
nlohmann::json to_json(const Seed& s);
nlohmann::json to_json(const EstimateResult& e);
nlohmann::json to_json(const AdaptiveResult& a);
nlohmann::json to_json(const SupportSpec& s);

// Family with its check report. The member list is written out when the
// family has at most 2^16 members; larger families only carry the apexes.
nlohmann::json to_json(const HypothesisFamily& f, const FamilyReport& rep);

// Inverse of to_json(SupportSpec). Also accepts {"kind": "square"} for the
// unit square and {"kind": "regular_polygon", "m", "circumradius", "center",
// "phase"}. Throws ValidationError on a malformed description.
SupportSpec support_from_json(const nlohmann::json& j);

geom2d::ConvexPolygon polygon_from_json(const nlohmann::json& j);

}  // namespace csest::io
