#include "higgs/detquartic/fixture.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace higgs::detquartic {

namespace {

std::array<std::int64_t, 3> triple(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw DataError(where + ": expected an integer triple");
  std::array<std::int64_t, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number_integer()) throw DataError(where + ": expected an integer triple");
    out[i] = j[i].get<std::int64_t>();
  }
  return out;
}

}  // namespace

QuarticFixture parse_fixture(const std::string& json_text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(origin + ": " + e.what());
  }
  QuarticFixture fx;
  fx.name = j.value("name", origin);
  if (!j.contains("matrix") || !j["matrix"].is_array()) throw DataError(origin + ": missing field 'matrix'");
  const auto& m = j["matrix"];
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (!m[r].is_array() || m[r].size() != m.size())
      throw DataError(origin + ": field 'matrix' row " + std::to_string(r + 1) + " is not of length " +
                      std::to_string(m.size()));
    fx.matrix.emplace_back();
    for (std::size_t c = 0; c < m.size(); ++c)
      fx.matrix.back().push_back(
          triple(m[r][c], origin + ": field 'matrix' entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")"));
  }
  if (j.contains("column")) {
    if (!j["column"].is_array() || j["column"].size() != m.size())
      throw DataError(origin + ": field 'column' must have " + std::to_string(m.size()) + " entries");
    for (const auto& v : j["column"]) {
      if (!v.is_number_integer()) throw DataError(origin + ": field 'column' must hold integers");
      fx.column.push_back(v.get<std::int64_t>());
    }
  } else {
    fx.column.assign(m.size(), 0);
  }
  if (j.contains("reported_points"))
    for (const auto& [name, pt] : j["reported_points"].items())
      fx.reported_points[name] = triple(pt, origin + ": field 'reported_points." + name + "'");
  return fx;
}

QuarticFixture load_fixture(const std::string& path_or_name) {
  std::filesystem::path path(path_or_name);
  if (!std::filesystem::exists(path)) path = std::filesystem::path(HIGGS_FIXTURE_DIR) / (path_or_name + ".json");
  std::ifstream in(path);
  if (!in) throw DataError("fixture '" + path_or_name + "' not found");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_fixture(text.str(), path.string());
}

}  // namespace higgs::detquartic
