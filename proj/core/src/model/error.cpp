#include "langconf/error.hpp"

namespace langconf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidLanguageTag: return "InvalidLanguageTag";
    case ErrorCode::AllUnidentified: return "AllUnidentified";
    case ErrorCode::MixedGranularity: return "MixedGranularity";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::CorpusTooSmall: return "CorpusTooSmall";
    case ErrorCode::NoProfiles: return "NoProfiles";
    case ErrorCode::UnnormalizedDistribution: return "UnnormalizedDistribution";
    case ErrorCode::NoLinePassers: return "NoLinePassers";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateFeature: return "DuplicateFeature";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NoCoverage: return "NoCoverage";
    case ErrorCode::NoOverlap: return "NoOverlap";
    case ErrorCode::AllZeroColumn: return "AllZeroColumn";
    case ErrorCode::AllColumnsSkipped: return "AllColumnsSkipped";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::TooManyMalformed: return "TooManyMalformed";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace langconf
