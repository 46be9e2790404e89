#include "langconf/metrics/entropy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "langconf/error.hpp"

namespace langconf::metrics {

std::string_view to_string(LogBase b) noexcept {
  return b == LogBase::Natural ? "natural" : "base2";
}

std::string_view to_string(ZeroProbabilityRule r) noexcept {
  return r == ZeroProbabilityRule::Support ? "support" : "clamp";
}

LogBase parse_log_base(std::string_view text) {
  if (text == "natural" || text == "e") return LogBase::Natural;
  if (text == "base2" || text == "2") return LogBase::Base2;
  throw Error(ErrorCode::InvalidArgument, "unknown log base '" + std::string(text) + "'");
}

ZeroProbabilityRule parse_zero_probability_rule(std::string_view text) {
  if (text == "support") return ZeroProbabilityRule::Support;
  if (text == "clamp") return ZeroProbabilityRule::Clamp;
  throw Error(ErrorCode::InvalidArgument, "unknown zero-probability rule '" + std::string(text) + "'");
}

EntropyResult confusion_entropy(const LanguageDistribution& d, const ExpectationSet& expected,
                                const EntropyOptions& options) {
  const double total = d.identified_mass();
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::UnnormalizedDistribution, "mass sums to " + std::to_string(total));
  }
  const double scale = options.log_base == LogBase::Base2 ? 1.0 / std::numbers::ln2 : 1.0;

  EntropyResult result;
  result.log_base = options.log_base;
  auto add = [&](const LanguageTag& lang, double term) {
    term *= scale;
    if (term == 0.0) term = 0.0;  // no negative zeros in reports
    result.contributions.emplace(lang, term);
  };

  for (const auto& [lang, p] : d.mass()) {
    if (expected.contains(lang)) add(lang, -(1.0 - p) * std::log(p));
    else add(lang, -p * std::log(p));
  }
  for (const auto& lang : expected.languages()) {
    if (d.mass().contains(lang)) continue;
    result.support_missing_expected.insert(lang);
    if (options.zero_rule == ZeroProbabilityRule::Clamp) {
      add(lang, -(1.0 - kClampProbability) * std::log(kClampProbability));
    }
  }
  for (const auto& [lang, term] : result.contributions) result.value += term;
  return result;
}

}  // namespace langconf::metrics
