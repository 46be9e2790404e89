#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "langconf/language_tag.hpp"

namespace langconf {

enum class Setting { Monolingual, Crosslingual };
enum class Task { Prompting, Inversion };

std::string_view to_string(Setting s) noexcept;
std::string_view to_string(Task t) noexcept;
Setting parse_setting(std::string_view text);
Task parse_task(std::string_view text);

using LanguageSet = std::set<LanguageTag>;

// One model response with the languages it was expected to use.
//
// context_langs holds the instruction language for prompting records and the
// training languages for inversion records.
struct GenerationRecord {
  std::string id;
  std::string model;
  std::string dataset;
  Setting setting = Setting::Monolingual;
  Task task = Task::Prompting;
  LanguageTag target_lang{"und"};
  LanguageSet context_langs;
  std::string response_text;
  std::optional<std::string> eval_step;
};

/// Throws InvalidArgument when a crosslingual record lists its target among
/// the context languages, or when the id is empty.
void validate_record(const GenerationRecord& record);

/// The expected language set X1: target plus every context language.
class ExpectationSet {
 public:
  explicit ExpectationSet(LanguageSet expected);

  static ExpectationSet for_record(const GenerationRecord& record);

  const LanguageSet& languages() const noexcept { return expected_; }
  bool contains(const LanguageTag& lang) const noexcept { return expected_.contains(lang); }

 private:
  LanguageSet expected_;
};

}  // namespace langconf
