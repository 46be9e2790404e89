#pragma once

#include "langconf/distribution.hpp"
#include "langconf/lid/detector.hpp"
#include "langconf/record.hpp"

namespace langconf::lid {

/// Each non-blank line weighs 1/|lines|; unidentified lines feed unidentified_mass.
LanguageDistribution build_line_distribution(const GenerationRecord& record, const DetectorChain& chain);

/// Lines are detected first and tokenized with their detected language as the
/// hint; every token of the response then weighs 1/|tokens|.
LanguageDistribution build_word_distribution(const GenerationRecord& record, const DetectorChain& chain);

struct RecordDistributions {
  LanguageDistribution line;
  LanguageDistribution word;
};

/// Both granularities, detecting each line only once.
RecordDistributions build_distributions(const GenerationRecord& record, const DetectorChain& chain);

}  // namespace langconf::lid
