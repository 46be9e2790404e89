#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "langconf/pipeline/config.hpp"
#include "langconf/pipeline/distribution_io.hpp"

namespace langconf::pipeline {

inline constexpr const char* kToolVersion = "0.3.0";

struct RunSummary {
  std::size_t records = 0;
  std::size_t excluded = 0;
  std::vector<std::string> artifacts;  // file names inside output_dir, sorted
  std::vector<std::string> warnings;
};

/// Detects line and word distributions for every record, in parallel. Output
/// order follows input order; response texts are dropped.
std::vector<ScoredRecord> score_records(std::vector<GenerationRecord> records, const lid::DetectorChain& chain);

/// Validates the config, ingests and scores the corpus, and writes every
/// artifact plus manifest.json into config.output_dir. Nothing is written
/// unless the whole computation succeeds; each file is replaced atomically.
/// The manifest's `generated_at` field is the only non-deterministic output.
RunSummary run_pipeline(const PipelineConfig& config);

/// Maps an exception to the CLI exit code: 1 validation, 2 data, 3 internal.
int exit_code_for(const std::exception& e) noexcept;

}  // namespace langconf::pipeline
