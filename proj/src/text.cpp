#include "clireval/text.hpp"

namespace clireval {

namespace {

std::uint32_t ascii_lower(std::uint32_t c) {
  return (c >= 'A' && c <= 'Z') ? c + 32 : c;
}

}  // namespace

bool is_ascii_space(std::uint32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_ascii_punct(std::uint32_t c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
         (c >= '{' && c <= '~');
}

std::vector<std::uint32_t> decode_utf8(std::string_view text) {
  std::vector<std::uint32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto cont = [&](std::size_t pos) {
    return pos < text.size() && (static_cast<unsigned char>(text[pos]) & 0xC0) == 0x80;
  };
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      i += 1;
    } else if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
      out.push_back((std::uint32_t(b0 & 0x1F) << 6) | (text[i + 1] & 0x3F));
      i += 2;
    } else if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
      out.push_back((std::uint32_t(b0 & 0x0F) << 12) | (std::uint32_t(text[i + 1] & 0x3F) << 6) |
                    (text[i + 2] & 0x3F));
      i += 3;
    } else if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
      out.push_back((std::uint32_t(b0 & 0x07) << 18) | (std::uint32_t(text[i + 1] & 0x3F) << 12) |
                    (std::uint32_t(text[i + 2] & 0x3F) << 6) | (text[i + 3] & 0x3F));
      i += 4;
    } else {
      out.push_back(b0);  // invalid byte, pass through
      i += 1;
    }
  }
  return out;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(const std::vector<std::uint32_t>& codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (const auto cp : codepoints) {
    append_utf8(out, cp);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text, const LanguageProfile& profile) {
  std::vector<std::uint32_t> cps = decode_utf8(text);
  if (profile.lowercase) {
    for (auto& c : cps) {
      c = ascii_lower(c);
    }
  }

  std::vector<std::string> out;
  if (profile.mode == TokenMode::character) {
    for (const auto c : cps) {
      if (is_ascii_space(c)) {
        continue;
      }
      if (profile.strip_punct && is_ascii_punct(c)) {
        continue;
      }
      std::string tok;
      append_utf8(tok, c);
      out.push_back(std::move(tok));
    }
    return out;
  }

  std::string cur;
  const auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  };
  for (const auto c : cps) {
    if (is_ascii_space(c)) {
      flush();
      continue;
    }
    if (is_ascii_punct(c)) {
      if (profile.strip_punct) {
        flush();
        continue;
      }
      if (profile.split_punct) {
        flush();
        std::string tok;
        append_utf8(tok, c);
        out.push_back(std::move(tok));
        continue;
      }
    }
    append_utf8(cur, c);
  }
  flush();
  return out;
}

}  // namespace clireval
