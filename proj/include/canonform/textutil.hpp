#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace canonform::text {

/// ASCII lowercase copy.
std::string to_lower(std::string_view s);

/// Strips leading/trailing ASCII whitespace.
std::string_view trim(std::string_view s);

/// Lowercased alphanumeric runs, in order with duplicates kept.
/// "Stepmother/stepsisters" -> {"stepmother", "stepsisters"}.
std::vector<std::string> tokenize(std::string_view s);

/// Whole-word, case-insensitive containment. A keyword may be a multi-word
/// phrase ("simulation law"), which must appear as a contiguous token run.
bool contains_keyword(std::string_view label, std::string_view keyword);

/// True when the label matches at least one keyword.
bool matches_any(std::string_view label, std::span<const std::string> keywords);

} // namespace canonform::text
