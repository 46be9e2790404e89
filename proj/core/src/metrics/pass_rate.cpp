#include "langconf/metrics/pass_rate.hpp"

#include <string>

#include "langconf/error.hpp"
#include "langconf/language_codes.hpp"

namespace langconf::metrics {

std::string_view to_string(WprMode m) noexcept {
  return m == WprMode::English ? "english" : "strict";
}

WprMode parse_wpr_mode(std::string_view text) {
  if (text == "english") return WprMode::English;
  if (text == "strict") return WprMode::Strict;
  throw Error(ErrorCode::InvalidArgument, "unknown WPR mode '" + std::string(text) + "'");
}

bool has_line_error(const GenerationRecord& record, const LanguageDistribution& line) {
  const auto expected = ExpectationSet::for_record(record);
  for (const auto& [lang, p] : line.mass()) {
    if (!expected.contains(lang)) return true;
  }
  return false;
}

bool has_word_error(const GenerationRecord& record, const LanguageDistribution& word, WprMode mode) {
  if (mode == WprMode::English) {
    static const LanguageTag english("eng");
    return uses_non_latin_script(record.target_lang) && word.probability(english) > 0.0;
  }
  const auto expected = ExpectationSet::for_record(record);
  for (const auto& [lang, p] : word.mass()) {
    if (!expected.contains(lang)) return true;
  }
  return false;
}

double line_pass_rate(std::span<const PassRateInput> records) {
  if (records.empty()) throw Error(ErrorCode::EmptyInput, "no records for line pass rate");
  std::size_t passed = 0;
  for (const auto& r : records) {
    if (!has_line_error(*r.record, *r.line)) ++passed;
  }
  return static_cast<double>(passed) / static_cast<double>(records.size());
}

double word_pass_rate(std::span<const PassRateInput> records, WprMode mode) {
  std::size_t line_passers = 0;
  std::size_t passed = 0;
  for (const auto& r : records) {
    if (has_line_error(*r.record, *r.line)) continue;
    ++line_passers;
    if (!r.word) throw Error(ErrorCode::InvalidArgument, "record " + r.record->id + " lacks a word distribution");
    if (!has_word_error(*r.record, *r.word, mode)) ++passed;
  }
  if (line_passers == 0) throw Error(ErrorCode::NoLinePassers, "no record passes the line level");
  return static_cast<double>(passed) / static_cast<double>(line_passers);
}

}  // namespace langconf::metrics
