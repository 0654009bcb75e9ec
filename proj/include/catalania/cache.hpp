#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "catalania/enumeration.hpp"
#include "catalania/linear_form.hpp"

namespace catalania {

inline constexpr const char* kVersion = "0.1.0";

std::string diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const std::string& text);

std::string class_key_to_json(const ClassKey& key);
ClassKey class_key_from_json(const std::string& text);

std::string form_to_json(const LinearForm& f);
LinearForm form_from_json(const std::string& text);

std::string table_to_json(const ClassTable& tbl);
ClassTable table_from_json(const std::string& text);

// CATALANIA_CACHE, else XDG_CACHE_HOME/catalania, else ~/.cache/catalania.
std::filesystem::path default_cache_dir();

// Loads a cached table when the file exists and carries the current library
// version; enumerates and stores it otherwise.
ClassTable cached_enumerate(int order, const std::filesystem::path& dir, int max_order = kDefaultMaxOrder);

}  // namespace catalania
