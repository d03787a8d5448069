#pragma once

// Internal JSON/file helpers shared by the .cpp files. Not installed.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "clireval/errors.hpp"
#include "clireval/text.hpp"

namespace clireval::detail {

using json = nlohmann::json;

inline std::string where(const std::string& path, std::size_t line_no) {
  return path + ":" + std::to_string(line_no);
}

inline json parse_json_line(const std::string& line, const std::string& path, std::size_t line_no) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw ValidationError(where(path, line_no) + ": malformed JSON: " + e.what());
  }
}

inline std::string require_string(const json& j, const char* key, const std::string& context) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ValidationError(context + ": missing or non-string field \"" + key + "\"");
  }
  return j.at(key).get<std::string>();
}

inline std::int64_t require_int(const json& j, const char* key, const std::string& context) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ValidationError(context + ": missing or non-integer field \"" + key + "\"");
  }
  return j.at(key).get<std::int64_t>();
}

inline double require_number(const json& j, const char* key, const std::string& context) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ValidationError(context + ": missing or non-numeric field \"" + key + "\"");
  }
  return j.at(key).get<double>();
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open file: " + path);
  }
  return in;
}

inline std::string read_file(const std::string& path) {
  auto in = open_input(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Writes content to path via a temp file + rename so readers never observe
/// a partial file.
void atomic_write_file(const std::string& path, const std::string& content);

json profile_to_json(const LanguageProfile& profile);
LanguageProfile profile_from_json(const json& j, const std::string& context);

}  // namespace clireval::detail
