#include "langconf/language_codes.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_map>

namespace langconf {
namespace {

// ISO 639-1 -> ISO 639-3. Chinese and Arabic map to the individual languages
// (cmn, arb) that evaluation corpora use, not to the macrolanguage codes.
const std::unordered_map<std::string, std::string>& two_letter_codes() {
  static const std::unordered_map<std::string, std::string> table = {
      {"af", "afr"}, {"am", "amh"}, {"ar", "arb"}, {"az", "aze"}, {"be", "bel"}, {"bg", "bul"},
      {"bn", "ben"}, {"bo", "bod"}, {"bs", "bos"}, {"ca", "cat"}, {"cs", "ces"}, {"cy", "cym"},
      {"da", "dan"}, {"de", "deu"}, {"el", "ell"}, {"en", "eng"}, {"eo", "epo"}, {"es", "spa"},
      {"et", "est"}, {"eu", "eus"}, {"fa", "fas"}, {"fi", "fin"}, {"fr", "fra"}, {"ga", "gle"},
      {"gl", "glg"}, {"gu", "guj"}, {"he", "heb"}, {"hi", "hin"}, {"hr", "hrv"}, {"hu", "hun"},
      {"hy", "hye"}, {"id", "ind"}, {"is", "isl"}, {"it", "ita"}, {"ja", "jpn"}, {"jv", "jav"},
      {"ka", "kat"}, {"kk", "kaz"}, {"km", "khm"}, {"kn", "kan"}, {"ko", "kor"}, {"ky", "kir"},
      {"la", "lat"}, {"lo", "lao"}, {"lt", "lit"}, {"lv", "lav"}, {"mk", "mkd"}, {"ml", "mal"},
      {"mn", "mon"}, {"mr", "mar"}, {"ms", "msa"}, {"mt", "mlt"}, {"my", "mya"}, {"nb", "nob"},
      {"ne", "nep"}, {"nl", "nld"}, {"nn", "nno"}, {"no", "nor"}, {"pa", "pan"}, {"pl", "pol"},
      {"ps", "pus"}, {"pt", "por"}, {"ro", "ron"}, {"ru", "rus"}, {"si", "sin"}, {"sk", "slk"},
      {"sl", "slv"}, {"so", "som"}, {"sq", "sqi"}, {"sr", "srp"}, {"sv", "swe"}, {"sw", "swa"},
      {"ta", "tam"}, {"te", "tel"}, {"tg", "tgk"}, {"th", "tha"}, {"tl", "tgl"}, {"tr", "tur"},
      {"uk", "ukr"}, {"ur", "urd"}, {"uz", "uzb"}, {"vi", "vie"}, {"yi", "ydd"}, {"yo", "yor"},
      {"zh", "cmn"}, {"zu", "zul"},
  };
  return table;
}

// Bibliographic ISO 639-2/B codes and macrolanguages folded onto the codes above.
const std::unordered_map<std::string, std::string>& three_letter_aliases() {
  static const std::unordered_map<std::string, std::string> table = {
      {"alb", "sqi"}, {"arm", "hye"}, {"baq", "eus"}, {"bur", "mya"}, {"chi", "cmn"}, {"cze", "ces"},
      {"dut", "nld"}, {"fre", "fra"}, {"geo", "kat"}, {"ger", "deu"}, {"gre", "ell"}, {"ice", "isl"},
      {"mac", "mkd"}, {"may", "msa"}, {"per", "fas"}, {"rum", "ron"}, {"slo", "slk"}, {"tib", "bod"},
      {"wel", "cym"}, {"zho", "cmn"}, {"ara", "arb"}, {"yid", "ydd"},
  };
  return table;
}

const std::unordered_map<std::string, std::string>& scripts() {
  static const std::unordered_map<std::string, std::string> table = {
      {"amh", "Ethi"}, {"arb", "Arab"}, {"ben", "Beng"}, {"bel", "Cyrl"}, {"bod", "Tibt"}, {"bul", "Cyrl"},
      {"cmn", "Hans"}, {"ell", "Grek"}, {"fas", "Arab"}, {"guj", "Gujr"}, {"heb", "Hebr"}, {"hin", "Deva"},
      {"hye", "Armn"}, {"jpn", "Jpan"}, {"kan", "Knda"}, {"kat", "Geor"}, {"kaz", "Cyrl"}, {"khm", "Khmr"},
      {"kir", "Cyrl"}, {"kor", "Kore"}, {"lao", "Laoo"}, {"mal", "Mlym"}, {"mar", "Deva"}, {"mkd", "Cyrl"},
      {"mon", "Cyrl"}, {"mya", "Mymr"}, {"nep", "Deva"}, {"pan", "Guru"}, {"pus", "Arab"}, {"rus", "Cyrl"},
      {"sin", "Sinh"}, {"srp", "Cyrl"}, {"tam", "Taml"}, {"tel", "Telu"}, {"tgk", "Cyrl"}, {"tha", "Thai"},
      {"ukr", "Cyrl"}, {"urd", "Arab"}, {"ydd", "Hebr"}, {"yue", "Hant"}, {"mhr", "Cyrl"},
  };
  return table;
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::optional<LanguageTag> normalize_language_code(std::string_view raw) {
  constexpr std::string_view fasttext_prefix = "__label__";
  if (raw.starts_with(fasttext_prefix)) raw.remove_prefix(fasttext_prefix.size());
  while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.front()))) raw.remove_prefix(1);
  while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);

  std::string_view base = raw;
  std::optional<std::string_view> script;
  if (const auto sep = raw.find_first_of("-_"); sep != std::string_view::npos) {
    base = raw.substr(0, sep);
    auto rest = raw.substr(sep + 1);
    // A four-letter subtag is a script; regions (pt_BR) are dropped.
    const auto next = rest.find_first_of("-_");
    auto subtag = rest.substr(0, next);
    if (subtag.size() == 4) script = subtag;
  }

  std::string code = lower_ascii(base);
  if (code.size() == 2) {
    const auto it = two_letter_codes().find(code);
    if (it == two_letter_codes().end()) return std::nullopt;
    code = it->second;
  } else if (code.size() == 3) {
    if (const auto it = three_letter_aliases().find(code); it != three_letter_aliases().end()) code = it->second;
  } else {
    return std::nullopt;
  }
  try {
    return LanguageTag(code, script);
  } catch (...) {
    return std::nullopt;
  }
}

std::string default_script(const LanguageTag& tag) {
  if (tag.script()) return *tag.script();
  const auto it = scripts().find(tag.code());
  return it == scripts().end() ? "Latn" : it->second;
}

bool uses_non_latin_script(const LanguageTag& tag) {
  return default_script(tag) != "Latn";
}

bool is_cjk_language(const LanguageTag& tag) {
  static const std::string cjk_scripts[] = {"Hans", "Hant", "Hani", "Jpan", "Kore", "Hang", "Hira", "Kana"};
  const std::string script = default_script(tag);
  return std::find(std::begin(cjk_scripts), std::end(cjk_scripts), script) != std::end(cjk_scripts);
}

}  // namespace langconf
