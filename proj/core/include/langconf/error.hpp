#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace langconf {

enum class ErrorCode {
  InvalidArgument,
  InvalidLanguageTag,
  AllUnidentified,
  MixedGranularity,
  EmptyInput,
  LengthMismatch,
  CorpusTooSmall,
  NoProfiles,
  UnnormalizedDistribution,
  NoLinePassers,
  DegenerateInput,
  ParseError,
  DuplicateFeature,
  DimensionMismatch,
  ZeroVector,
  KindMismatch,
  NoCoverage,
  NoOverlap,
  AllZeroColumn,
  AllColumnsSkipped,
  FileNotFound,
  TooManyMalformed,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI's exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace langconf
