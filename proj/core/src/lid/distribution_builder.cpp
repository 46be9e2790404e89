#include "langconf/lid/distribution_builder.hpp"

#include <string>
#include <vector>

#include "langconf/lid/tokenize.hpp"

namespace langconf::lid {
namespace {

struct Tally {
  LanguageDistribution::MassMap counts;
  std::size_t unidentified = 0;
  std::size_t units = 0;

  void add(const DetectionResult& r) {
    ++units;
    if (r.identified()) counts[*r.lang] += 1.0;
    else ++unidentified;
  }

  LanguageDistribution finish(Granularity g) const {
    if (units == 0) return LanguageDistribution::empty(g);
    const double n = static_cast<double>(units);
    LanguageDistribution::MassMap mass;
    for (const auto& [lang, c] : counts) mass.emplace(lang, c / n);
    return LanguageDistribution(g, std::move(mass), static_cast<double>(unidentified) / n, units);
  }
};

}  // namespace

LanguageDistribution build_line_distribution(const GenerationRecord& record, const DetectorChain& chain) {
  Tally tally;
  for (const auto& line : split_lines(record.response_text)) tally.add(detect_unit(line, chain));
  return tally.finish(Granularity::Line);
}

LanguageDistribution build_word_distribution(const GenerationRecord& record, const DetectorChain& chain) {
  return build_distributions(record, chain).word;
}

RecordDistributions build_distributions(const GenerationRecord& record, const DetectorChain& chain) {
  Tally lines, words;
  for (const auto& line : split_lines(record.response_text)) {
    const DetectionResult line_result = detect_unit(line, chain);
    lines.add(line_result);
    for (const auto& token : tokenize(line, line_result.lang)) words.add(detect_unit(token, chain));
  }
  return {lines.finish(Granularity::Line), words.finish(Granularity::Word)};
}

}  // namespace langconf::lid
