#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "langconf/language_tag.hpp"

namespace langconf::lid {

/// Splits on LF, strips CR, drops blank lines.
std::vector<std::string> split_lines(std::string_view text);

/// Word tokens of one line.
///
/// Lines in a space-delimited script are split on Unicode whitespace with
/// leading/trailing punctuation stripped. When the hint is a CJK language, the
/// line is mostly CJK, or the line mixes scripts, each whitespace chunk is cut
/// further into maximal same-script runs. Tokens without a letter are dropped.
std::vector<std::string> tokenize(std::string_view line, const std::optional<LanguageTag>& lang_hint = std::nullopt);

}  // namespace langconf::lid
