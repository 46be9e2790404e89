#pragma once

#include <span>
#include <string_view>

#include "langconf/distribution.hpp"
#include "langconf/record.hpp"

namespace langconf::metrics {

/// English: word errors are English tokens in responses whose target uses a
/// non-Latin script; Latin-script targets never fail. Strict: any token in a
/// language outside the expectation set is an error.
enum class WprMode { English, Strict };

std::string_view to_string(WprMode m) noexcept;
WprMode parse_wpr_mode(std::string_view text);

struct PassRateInput {
  const GenerationRecord* record = nullptr;
  const LanguageDistribution* line = nullptr;
  const LanguageDistribution* word = nullptr;  // only needed for the word pass rate
};

/// A line error is any identified line language outside the expectation set.
bool has_line_error(const GenerationRecord& record, const LanguageDistribution& line);
bool has_word_error(const GenerationRecord& record, const LanguageDistribution& word, WprMode mode);

/// |R \ E_L| / |R|. Throws EmptyInput.
double line_pass_rate(std::span<const PassRateInput> records);

/// |(R \ E_L) \ E_W| / |R \ E_L|. Throws NoLinePassers when nobody passes the
/// line level, InvalidArgument when a line passer has no word distribution.
double word_pass_rate(std::span<const PassRateInput> records, WprMode mode = WprMode::English);

}  // namespace langconf::metrics
