#include "langconf/lid/script_detector.hpp"

#include <map>
#include <string>

#include "langconf/lid/unicode.hpp"

namespace langconf::lid {
namespace {

const std::map<std::string_view, std::string_view>& unique_scripts() {
  static const std::map<std::string_view, std::string_view> table = {
      {"Hang", "kor"}, {"Hira", "jpn"}, {"Kana", "jpn"}, {"Grek", "ell"}, {"Thai", "tha"}, {"Armn", "hye"},
      {"Geor", "kat"}, {"Gujr", "guj"}, {"Guru", "pan"}, {"Ethi", "amh"}, {"Sinh", "sin"}, {"Taml", "tam"},
      {"Telu", "tel"}, {"Knda", "kan"}, {"Mlym", "mal"}, {"Khmr", "khm"}, {"Laoo", "lao"}, {"Mymr", "mya"},
      {"Tibt", "bod"}, {"Orya", "ory"},
  };
  return table;
}

}  // namespace

ScriptDetector::ScriptDetector() {
  for (const auto& [script, code] : unique_scripts()) supported_.insert(LanguageTag(code));
}

DetectionResult ScriptDetector::classify(std::string_view unit, const LanguageSet* candidates) const {
  std::map<std::string_view, std::size_t> counts;
  std::size_t letters = 0;
  for (char32_t c : decode_utf8(unit)) {
    if (!is_letter(c)) continue;
    const auto script = script_code(c);
    if (script == "Zyyy" || script == "Zinh") continue;
    ++counts[script];
    ++letters;
  }
  if (letters == 0) return DetectionResult::unidentified();

  // Any kana makes Han-bearing text Japanese.
  const std::size_t kana = (counts.contains("Hira") ? counts["Hira"] : 0) + (counts.contains("Kana") ? counts["Kana"] : 0);
  std::string_view dominant;
  std::size_t dominant_count = 0;
  for (const auto& [script, n] : counts) {
    if (n > dominant_count) {
      dominant = script;
      dominant_count = n;
    }
  }
  if (kana > 0 && (dominant == "Hani" || dominant == "Hira" || dominant == "Kana")) {
    dominant = "Hira";
    dominant_count = kana + (counts.contains("Hani") ? counts["Hani"] : 0);
  }
  const auto it = unique_scripts().find(dominant);
  if (it == unique_scripts().end()) return DetectionResult::unidentified();
  LanguageTag lang(it->second);
  if (candidates && !candidates->contains(lang)) return DetectionResult::unidentified();
  return DetectionResult{lang, static_cast<double>(dominant_count) / static_cast<double>(letters)};
}

}  // namespace langconf::lid
