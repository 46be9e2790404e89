#pragma once

#include <map>
#include <string_view>

#include "langconf/distribution.hpp"
#include "langconf/record.hpp"

namespace langconf::metrics {

enum class LogBase { Natural, Base2 };

/// How expected languages that never occur in the output are scored.
/// Support: they contribute nothing (the sum runs over detected languages).
/// Clamp: they contribute -(1 - eps) log eps with eps = kClampProbability.
enum class ZeroProbabilityRule { Support, Clamp };

inline constexpr double kClampProbability = 1e-10;

std::string_view to_string(LogBase b) noexcept;
std::string_view to_string(ZeroProbabilityRule r) noexcept;
LogBase parse_log_base(std::string_view text);
ZeroProbabilityRule parse_zero_probability_rule(std::string_view text);

struct EntropyOptions {
  LogBase log_base = LogBase::Natural;
  ZeroProbabilityRule zero_rule = ZeroProbabilityRule::Support;
};

struct EntropyResult {
  double value = 0.0;
  std::map<LanguageTag, double> contributions;  // per-language terms, summing to value
  LanguageSet support_missing_expected;
  LogBase log_base = LogBase::Natural;
};

/// Language confusion entropy of a normalized distribution:
///
///   H = sum_{x in X1} -(1 - p(x)) log p(x)  +  sum_{x in X2} -p(x) log p(x)
///
/// where X1 is the part of the support inside the expectation set and X2 the
/// rest. Expected languages get a small weight (1 - p) so a dominant expected
/// language costs little, while every unexpected language adds a full entropy
/// term. Throws UnnormalizedDistribution unless the mass sums to 1 +- 1e-9.
EntropyResult confusion_entropy(const LanguageDistribution& d, const ExpectationSet& expected,
                                const EntropyOptions& options = {});

/// An entropy value tied back to the record and granularity it came from.
struct EntropyObservation {
  const GenerationRecord* record = nullptr;
  Granularity granularity = Granularity::Line;
  EntropyResult entropy;
};

}  // namespace langconf::metrics
