#include "langconf/record.hpp"

#include <string>

#include "langconf/error.hpp"

namespace langconf {

std::string_view to_string(Setting s) noexcept {
  return s == Setting::Monolingual ? "monolingual" : "crosslingual";
}

std::string_view to_string(Task t) noexcept {
  return t == Task::Prompting ? "prompting" : "inversion";
}

Setting parse_setting(std::string_view text) {
  if (text == "monolingual") return Setting::Monolingual;
  if (text == "crosslingual") return Setting::Crosslingual;
  throw Error(ErrorCode::InvalidArgument, "unknown setting '" + std::string(text) + "'");
}

Task parse_task(std::string_view text) {
  if (text == "prompting") return Task::Prompting;
  if (text == "inversion") return Task::Inversion;
  throw Error(ErrorCode::InvalidArgument, "unknown task '" + std::string(text) + "'");
}

void validate_record(const GenerationRecord& record) {
  if (record.id.empty()) throw Error(ErrorCode::InvalidArgument, "record id must not be empty");
  if (record.setting == Setting::Crosslingual && record.context_langs.contains(record.target_lang)) {
    throw Error(ErrorCode::InvalidArgument,
                "crosslingual record " + record.id + " lists its target " + record.target_lang.str() + " as context");
  }
}

ExpectationSet::ExpectationSet(LanguageSet expected) : expected_(std::move(expected)) {
  if (expected_.empty()) throw Error(ErrorCode::InvalidArgument, "expectation set must not be empty");
}

ExpectationSet ExpectationSet::for_record(const GenerationRecord& record) {
  LanguageSet expected = record.context_langs;
  expected.insert(record.target_lang);
  return ExpectationSet(std::move(expected));
}

}  // namespace langconf
