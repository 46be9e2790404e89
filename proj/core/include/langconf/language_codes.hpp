#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "langconf/language_tag.hpp"

namespace langconf {

// Maps detector output codes onto canonical ISO 639-3 tags.
//
// Accepts ISO 639-1 ("de"), ISO 639-2/B ("ger"), ISO 639-3 ("deu"), fastText
// style labels ("__label__de") and BCP-47-ish forms with a script or region
// subtag ("zh-Hans", "pt_BR"). Anything that cannot be mapped yields nullopt and
// is treated as unidentified by callers.
std::optional<LanguageTag> normalize_language_code(std::string_view raw);

/// Default ISO 15924 script for a language (Latn when unknown).
std::string default_script(const LanguageTag& tag);

/// True when the tag's script (explicit or default) is not Latin.
bool uses_non_latin_script(const LanguageTag& tag);

/// Languages written with Han, Kana or Hangul, for which text is not space delimited.
bool is_cjk_language(const LanguageTag& tag);

}  // namespace langconf
