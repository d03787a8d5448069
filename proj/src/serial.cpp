#include "serial.hpp"

#include <cstdio>
#include <filesystem>

namespace clireval::detail {

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open file for writing: " + tmp);
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::remove(tmp.c_str());
      throw std::runtime_error("write failed: " + tmp);
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path + ": " + ec.message());
  }
}

json profile_to_json(const LanguageProfile& profile) {
  return json{{"mode", profile.mode == TokenMode::word ? "word" : "char"},
              {"lowercase", profile.lowercase},
              {"strip_punct", profile.strip_punct},
              {"split_punct", profile.split_punct}};
}

LanguageProfile profile_from_json(const json& j, const std::string& context) {
  if (!j.is_object()) {
    throw ValidationError(context + ": profile must be an object");
  }
  LanguageProfile p;
  const std::string mode = j.value("mode", "word");
  if (mode == "word") {
    p.mode = TokenMode::word;
  } else if (mode == "char") {
    p.mode = TokenMode::character;
  } else {
    throw ValidationError(context + ": unknown token mode \"" + mode + "\"");
  }
  p.lowercase = j.value("lowercase", false);
  p.strip_punct = j.value("strip_punct", false);
  p.split_punct = j.value("split_punct", false);
  return p;
}

}  // namespace clireval::detail
