#include "langconf/language_tag.hpp"

#include <algorithm>
#include <cctype>

#include "langconf/error.hpp"

namespace langconf {
namespace {

bool all_ascii_alpha(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalpha(c) != 0; });
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

LanguageTag::LanguageTag(std::string_view code, std::optional<std::string_view> script) {
  if (code.size() != 3 || !all_ascii_alpha(code)) {
    throw Error(ErrorCode::InvalidLanguageTag, "language code must be three letters, got '" + std::string(code) + "'");
  }
  code_ = lower(code);
  if (script) {
    if (script->size() != 4 || !all_ascii_alpha(*script)) {
      throw Error(ErrorCode::InvalidLanguageTag, "script must be four letters, got '" + std::string(*script) + "'");
    }
    std::string s = lower(*script);
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    script_ = std::move(s);
  }
}

LanguageTag LanguageTag::parse(std::string_view text) {
  const auto sep = text.find_first_of("-_");
  if (sep == std::string_view::npos) {
    return LanguageTag(text);
  }
  return LanguageTag(text.substr(0, sep), text.substr(sep + 1));
}

std::optional<LanguageTag> LanguageTag::try_parse(std::string_view text) noexcept {
  try {
    return parse(text);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string LanguageTag::str() const {
  return script_ ? code_ + "-" + *script_ : code_;
}

}  // namespace langconf
