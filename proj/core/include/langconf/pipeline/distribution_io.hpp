#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "langconf/distribution.hpp"
#include "langconf/record.hpp"

namespace langconf::pipeline {

/// A record's metadata with its line- and word-level distributions. The
/// response text is not carried along.
struct ScoredRecord {
  GenerationRecord record;
  LanguageDistribution line;
  LanguageDistribution word;
};

/// One JSON object per record: metadata plus `line` and `word` objects holding
/// unit_count, unidentified_mass and the mass map.
std::string to_jsonl(const ScoredRecord& scored);
std::string write_scored_records(const std::vector<ScoredRecord>& records);
std::vector<ScoredRecord> read_scored_records(std::string_view jsonl);
std::vector<ScoredRecord> load_scored_records(const std::filesystem::path& path);

}  // namespace langconf::pipeline
