#pragma once

#include <string>
#include <string_view>

namespace langconf::lid {

// Thin wrappers over ICU character properties used by the tokenizer and the
// n-gram extractor. Malformed UTF-8 decodes to U+FFFD.

std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);

bool is_letter(char32_t c) noexcept;      // general category L*
bool is_mark(char32_t c) noexcept;        // general category M*
bool is_whitespace(char32_t c) noexcept;  // White_Space property
char32_t to_lower(char32_t c) noexcept;

/// ISO 15924 short code for the character's script ("Latn", "Hani", "Zyyy" for
/// common, "Zinh" for inherited).
std::string_view script_code(char32_t c) noexcept;

bool is_cjk_script(std::string_view script) noexcept;  // Hani, Hira, Kana, Hang

}  // namespace langconf::lid
