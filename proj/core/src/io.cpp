#include "csest/io.hpp"

#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <sstream>

#include "csest/errors.hpp"

namespace csest::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

geom2d::Point2 point_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError(fmt::format("{}: expected [x, y]", what));
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double number_field(const nlohmann::json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ValidationError(fmt::format("{}: missing numeric field '{}'", what, key));
  }
  return j[key].get<double>();
}

int int_field(const nlohmann::json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ValidationError(fmt::format("{}: missing integer field '{}'", what, key));
  }
  return j[key].get<int>();
}

}  // namespace

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

std::vector<geom2d::Point2> parse_points(std::string_view text) {
  std::vector<geom2d::Point2> pts;
  std::size_t line_no = 0;
  bool seen_row = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(fmt::format("line {}: expected two comma-separated columns", line_no));
    }
    const auto a = trim(line.substr(0, comma));
    const auto b = trim(line.substr(comma + 1));
    if (!seen_row && a == "x" && b == "y") {
      seen_row = true;
      continue;
    }
    seen_row = true;
    geom2d::Point2 p;
    if (!parse_double(a, p.x) || !parse_double(b, p.y)) {
      throw ParseError(fmt::format("line {}: expected two finite numbers", line_no));
    }
    pts.push_back(p);
  }
  return pts;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<geom2d::Point2> read_points(const std::filesystem::path& path) {
  try {
    return parse_points(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

std::string points_csv(std::span<const geom2d::Point2> pts) {
  std::string out = "x,y\n";
  for (const auto& p : pts) out += fmt::format("{:.17g},{:.17g}\n", p.x, p.y);
  return out;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot write '{}'", path.string()));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(fmt::format("write to '{}' failed", path.string()));
}

nlohmann::json to_json(const geom2d::ConvexPolygon& p) {
  auto arr = nlohmann::json::array();
  for (const auto& v : p.vertices()) arr.push_back({v.x, v.y});
  return arr;
}

nlohmann::json to_json(const Seed& s) { return {{"root", s.root}, {"stream", s.stream}}; }

nlohmann::json to_json(const EstimateResult& e) {
  return {{"polygon", to_json(e.polygon)},
          {"r_requested", e.r_requested ? nlohmann::json(*e.r_requested) : nlohmann::json()},
          {"r_used", e.r_used},
          {"area", e.area},
          {"status", std::string(kgon::to_string(e.status))}};
}

nlohmann::json to_json(const AdaptiveResult& a) {
  auto diffs = nlohmann::json::array();
  for (const auto& d : a.per_r_diffs) {
    diffs.push_back({{"r", d.r}, {"r_prime", d.r_prime}, {"symm_diff", d.symm_diff},
                     {"threshold", d.threshold}});
  }
  return {{"r_hat", a.r_hat},
          {"R_n", a.R_n},
          {"chose_hull", a.chose_hull},
          {"hull_vertices", a.hull_vertices},
          {"polygon", to_json(a.polygon)},
          {"per_r_diffs", diffs}};
}

nlohmann::json to_json(const SupportSpec& s) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PolygonSupport>) {
          return {{"kind", "polygon"}, {"vertices", to_json(v.polygon)}};
        } else if constexpr (std::is_same_v<T, DiskSupport>) {
          return {{"kind", "disk"}, {"center", {v.center.x, v.center.y}}, {"radius", v.radius}};
        } else if constexpr (std::is_same_v<T, BallSupport>) {
          return {{"kind", "ball"}, {"dimension", v.dimension}, {"radius", v.radius}};
        } else {
          return {{"kind", "cube"}, {"dimension", v.dimension}, {"side", v.side}};
        }
      },
      s.variant());
}

nlohmann::json to_json(const HypothesisFamily& f, const FamilyReport& rep) {
  nlohmann::json j;
  j["r"] = f.r;
  j["h"] = f.h;
  j["delta"] = f.delta;
  j["base"] = to_json(f.base);
  auto apexes = nlohmann::json::array();
  for (const auto& a : f.apexes) apexes.push_back({a.x, a.y});
  j["apexes"] = apexes;
  if (f.half() <= 16) {
    auto members = nlohmann::json::array();
    for (std::uint64_t w = 0; w < f.member_count(); ++w) {
      members.push_back({{"omega", w}, {"polygon", to_json(f.member(w))}});
    }
    j["members"] = members;
  } else {
    j["members"] = nullptr;
  }
  j["checks"] = {{"n", rep.n},
                 {"expected_pair_diff", rep.expected_pair_diff},
                 {"min_pair_diff", rep.min_pair_diff},
                 {"max_pair_diff", rep.max_pair_diff},
                 {"max_pair_diff_error", rep.max_pair_diff_error},
                 {"pairs_checked", rep.pairs_checked},
                 {"min_affinity", rep.min_affinity},
                 {"affinity_bound", rep.affinity_bound},
                 {"base_area", rep.base_area},
                 {"members_in_unit_square", rep.members_in_unit_square},
                 {"max_member_vertices", rep.max_member_vertices},
                 {"lower_bound_value", rep.lower_bound_value},
                 {"failures", rep.failures}};
  return j;
}

geom2d::ConvexPolygon polygon_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("polygon: expected an array of [x, y] pairs");
  std::vector<geom2d::Point2> v;
  for (const auto& p : j) v.push_back(point_from_json(p, "polygon vertex"));
  try {
    return geom2d::ConvexPolygon(std::move(v));
  } catch (const Error& e) {
    throw ValidationError(fmt::format("polygon: {}", e.what()));
  }
}

SupportSpec support_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ValidationError("support: expected an object with a string 'kind'");
  }
  const auto kind = j["kind"].get<std::string>();
  try {
    if (kind == "square") return SupportSpec::polygon(geom2d::unit_square());
    if (kind == "polygon") {
      if (!j.contains("vertices")) throw ValidationError("support: polygon needs 'vertices'");
      return SupportSpec::polygon(polygon_from_json(j["vertices"]));
    }
    if (kind == "regular_polygon") {
      const geom2d::Point2 c =
          j.contains("center") ? point_from_json(j["center"], "support center") : geom2d::Point2{};
      const double phase = j.contains("phase") ? number_field(j, "phase", "support") : 0.0;
      return SupportSpec::polygon(geom2d::regular_polygon(
          int_field(j, "m", "support"), number_field(j, "circumradius", "support"), c, phase));
    }
    if (kind == "disk") {
      const geom2d::Point2 c =
          j.contains("center") ? point_from_json(j["center"], "support center") : geom2d::Point2{};
      return SupportSpec::disk(c, number_field(j, "radius", "support"));
    }
    if (kind == "ball") {
      return SupportSpec::ball(int_field(j, "dimension", "support"),
                               number_field(j, "radius", "support"));
    }
    if (kind == "cube") {
      return SupportSpec::cube(int_field(j, "dimension", "support"),
                               number_field(j, "side", "support"));
    }
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(fmt::format("support: {}", e.what()));
  }
  throw ValidationError(fmt::format(
      "support: unknown kind '{}' (square, polygon, regular_polygon, disk, ball, cube)", kind));
}

}  // namespace csest::io
