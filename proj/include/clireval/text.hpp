#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace clireval {

enum class TokenMode { word, character };

/// Tokenization rules for one language/script. Word mode splits on
/// whitespace; character mode emits one token per non-whitespace codepoint
/// (the default for space-free scripts). Punctuation handling and
/// lowercasing are ASCII-only; non-ASCII codepoints pass through untouched.
struct LanguageProfile {
  TokenMode mode = TokenMode::word;
  bool lowercase = false;
  bool strip_punct = false;  // punctuation acts as a token separator
  bool split_punct = false;  // punctuation becomes standalone tokens (word mode)

  bool operator==(const LanguageProfile&) const = default;
};

std::vector<std::string> tokenize(std::string_view text, const LanguageProfile& profile);

/// Codepoints of a UTF-8 string. Bytes that do not form a valid sequence
/// are passed through one byte per codepoint, so decoding never fails.
std::vector<std::uint32_t> decode_utf8(std::string_view text);

std::string encode_utf8(const std::vector<std::uint32_t>& codepoints);
void append_utf8(std::string& out, std::uint32_t codepoint);

bool is_ascii_space(std::uint32_t codepoint);
bool is_ascii_punct(std::uint32_t codepoint);

}  // namespace clireval
