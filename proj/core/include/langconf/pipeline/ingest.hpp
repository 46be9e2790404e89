#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "langconf/record.hpp"

namespace langconf::pipeline {

enum class InputFormat { LcbJsonl, MteiJsonl, GenericJsonl };

std::string_view to_string(InputFormat f) noexcept;
InputFormat parse_input_format(std::string_view text);

/// Ingestion tolerates up to this fraction of malformed lines.
inline constexpr double kMaxMalformedFraction = 0.10;

struct MalformedLine {
  std::size_t line_no = 0;
  std::string reason;
};

struct IngestResult {
  std::vector<GenerationRecord> records;
  std::vector<MalformedLine> malformed;
  std::vector<std::string> warnings;  // e.g. empty responses
};

/// One JSON object per line. Malformed lines are reported, not fatal, unless
/// more than 10% of the non-blank lines are malformed (TooManyMalformed).
/// Throws FileNotFound.
IngestResult ingest(const std::filesystem::path& path, InputFormat format);
IngestResult ingest_text(std::string_view contents, InputFormat format, const std::string& source = "<memory>");

/// Serializes a record in the generic-jsonl schema (no trailing newline).
std::string to_generic_jsonl(const GenerationRecord& record);

}  // namespace langconf::pipeline
