#include "catalania/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace catalania {

namespace {

nlohmann::json key_json(const ClassKey& key) {
  return {{"order", key.order()},
          {"heights", key.deplete.heights},
          {"strongly_extremal", key.strongly_extremal},
          {"class_height", key.class_height}};
}

ClassKey key_from(const nlohmann::json& j) {
  Diagram d{j.at("heights").get<std::vector<int>>()};
  if (d.order() != j.at("order").get<int>())
    throw std::invalid_argument("class key order does not match its heights");
  ClassKey key = canonicalize(d);
  if (key.deplete != d) throw std::invalid_argument("class key is not canonical: " + d.str());
  if (key.strongly_extremal != j.at("strongly_extremal").get<int>() ||
      key.class_height != j.at("class_height").get<int>())
    throw std::invalid_argument("class key metadata mismatch: " + d.str());
  return key;
}

}  // namespace

std::string diagram_to_json(const Diagram& d) {
  return nlohmann::json{{"order", d.order()}, {"heights", d.heights}}.dump();
}

Diagram diagram_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Diagram d{j.at("heights").get<std::vector<int>>()};
  if (d.order() != j.at("order").get<int>())
    throw std::invalid_argument("diagram order does not match its heights");
  return d;
}

std::string class_key_to_json(const ClassKey& key) { return key_json(key).dump(); }

ClassKey class_key_from_json(const std::string& text) {
  return key_from(nlohmann::json::parse(text));
}

std::string form_to_json(const LinearForm& f) {
  return nlohmann::json{{"t", f.t}, {"rows", f.m}}.dump();
}

LinearForm form_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LinearForm f = LinearForm::zero(j.at("t").get<int>());
  auto rows = j.at("rows").get<std::vector<std::vector<long long>>>();
  if (rows.size() != f.m.size()) throw std::invalid_argument("form row count mismatch");
  for (const auto& row : rows)
    if (row.size() != static_cast<size_t>(f.t) + 1)
      throw std::invalid_argument("form row width mismatch");
  f.m = std::move(rows);
  return f;
}

std::string table_to_json(const ClassTable& tbl) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["order"] = tbl.order;
  j["classes"] = nlohmann::json::array();
  for (const ClassKey& key : tbl.classes) j["classes"].push_back(key_json(key));
  return j.dump(2);
}

ClassTable table_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("version").get<std::string>() != kVersion)
    throw std::invalid_argument("cache was written by a different library version");
  ClassTable tbl;
  tbl.order = j.at("order").get<int>();
  for (const auto& jk : j.at("classes")) tbl.classes.push_back(key_from(jk));
  std::sort(tbl.classes.begin(), tbl.classes.end());
  for (int i = 0; i < static_cast<int>(tbl.classes.size()); ++i) {
    const ClassKey& k = tbl.classes[static_cast<size_t>(i)];
    tbl.index[{k.strongly_extremal, k.class_height}].push_back(i);
  }
  return tbl;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("CATALANIA_CACHE")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return std::filesystem::path(xdg) / "catalania";
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "catalania";
  return std::filesystem::temp_directory_path() / "catalania";
}

ClassTable cached_enumerate(int order, const std::filesystem::path& dir, int max_order) {
  const std::filesystem::path file = dir / ("classes_order_" + std::to_string(order) + ".json");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      ClassTable tbl = table_from_json(buf.str());
      if (tbl.order == order) return tbl;
    } catch (const std::exception&) {
      // fall through to a fresh enumeration
    }
  }
  ClassTable tbl = enumerate_classes(order, max_order);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!ec) {
    std::ofstream out(file);
    out << table_to_json(tbl);
  }
  return tbl;
}

}  // namespace catalania
