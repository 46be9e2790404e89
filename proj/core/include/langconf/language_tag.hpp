#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace langconf {

/// ISO 639-3 language code with an optional ISO 15924 script subtag.
///
/// Tags are normalized on construction: the code is lowercased and the script
/// title-cased, so `LanguageTag::parse("DEU")` equals `LanguageTag::parse("deu")`.
/// The textual form is `cmn` or `cmn-Hans`.
class LanguageTag {
 public:
  /// Throws Error{InvalidLanguageTag} unless code is three ASCII letters and
  /// script (when given) is four ASCII letters.
  explicit LanguageTag(std::string_view code, std::optional<std::string_view> script = std::nullopt);

  static LanguageTag parse(std::string_view text);
  static std::optional<LanguageTag> try_parse(std::string_view text) noexcept;

  const std::string& code() const noexcept { return code_; }
  const std::optional<std::string>& script() const noexcept { return script_; }

  std::string str() const;

  friend bool operator==(const LanguageTag&, const LanguageTag&) = default;
  friend std::strong_ordering operator<=>(const LanguageTag&, const LanguageTag&) = default;

 private:
  std::string code_;
  std::optional<std::string> script_;
};

}  // namespace langconf

template <>
struct std::hash<langconf::LanguageTag> {
  std::size_t operator()(const langconf::LanguageTag& tag) const noexcept {
    return std::hash<std::string>{}(tag.str());
  }
};
