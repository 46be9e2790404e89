#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "langconf/lid/detector.hpp"
#include "langconf/metrics/aggregate.hpp"
#include "langconf/metrics/entropy.hpp"
#include "langconf/metrics/pass_rate.hpp"
#include "langconf/metrics/spearman.hpp"
#include "langconf/pipeline/ingest.hpp"
#include "langconf/typology/graph.hpp"

namespace langconf::pipeline {

/// Environment variable naming the profile directory used by an `ngram`
/// detector that specifies neither `profiles` nor `seed`.
inline constexpr const char* kProfileDirEnv = "LANGCONF_PROFILE_DIR";

struct InputSpec {
  std::filesystem::path path;
  InputFormat format = InputFormat::GenericJsonl;
  friend bool operator==(const InputSpec&, const InputSpec&) = default;
};

/// `ngram` (trained profiles or a seed corpus directory) or `script`.
struct DetectorSpec {
  std::string name;
  std::optional<std::filesystem::path> profiles;
  std::optional<std::filesystem::path> seed;
  double margin = 0.0;
  bool abstain_on_unseen = true;
  friend bool operator==(const DetectorSpec&, const DetectorSpec&) = default;
};

struct GraphSpec {
  std::string name;
  std::filesystem::path path;
  typology::GraphKind kind = typology::GraphKind::Multivalued;
  typology::KernelTransform transform = typology::KernelTransform::None;
  std::optional<std::filesystem::path> code_map;
  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct PipelineConfig {
  std::vector<InputSpec> inputs;
  std::vector<DetectorSpec> detectors;
  metrics::LogBase log_base = metrics::LogBase::Natural;
  metrics::ZeroProbabilityRule zero_rule = metrics::ZeroProbabilityRule::Support;
  metrics::WprMode wpr_mode = metrics::WprMode::English;
  std::vector<metrics::KeyField> aggregation_keys = {metrics::KeyField::Model, metrics::KeyField::Setting,
                                                     metrics::KeyField::TargetLang, metrics::KeyField::Granularity};
  std::vector<GraphSpec> graphs;
  std::filesystem::path output_dir;
  std::uint64_t seed = 0;
  metrics::PValueMethod pvalue_method = metrics::PValueMethod::TApproximation;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

/// JSON config; relative paths resolve against `base_dir`. Throws InvalidArgument.
PipelineConfig parse_config(std::string_view json, const std::filesystem::path& base_dir);
PipelineConfig load_config(const std::filesystem::path& path);

/// Canonical JSON form; parse_config(config_to_json(c), any) == c.
std::string config_to_json(const PipelineConfig& config);

/// Hex SHA-256 of the canonical JSON form.
std::string config_hash(const PipelineConfig& config);

/// Pre-flight checks: every referenced path exists and every option is usable.
/// Throws FileNotFound or InvalidArgument listing the first problem found.
void validate_config(const PipelineConfig& config);

/// Instantiates the configured detectors in order.
lid::DetectorChain build_detector_chain(const std::vector<DetectorSpec>& specs);

}  // namespace langconf::pipeline
