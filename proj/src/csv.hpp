#pragma once

// Internal RFC-4180-style CSV helpers. Not installed.

#include <string>
#include <string_view>
#include <vector>

namespace clireval::detail {

/// Quotes a field when it contains a comma, quote, or newline.
std::string csv_escape(std::string_view field);

std::string csv_row(const std::vector<std::string>& fields);

/// Splits one CSV record (no embedded newlines) honoring double quotes.
std::vector<std::string> csv_split(std::string_view line);

}  // namespace clireval::detail
