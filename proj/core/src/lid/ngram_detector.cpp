#include "langconf/lid/ngram_detector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "langconf/error.hpp"
#include "langconf/lid/profile.hpp"

namespace langconf::lid {

NgramClassifier::NgramClassifier(std::span<const DetectorProfile> profiles, NgramOptions options) : options_(options) {
  if (profiles.empty()) throw Error(ErrorCode::NoProfiles, "n-gram classifier needs at least one profile");
  std::vector<const DetectorProfile*> sorted;
  for (const auto& p : profiles) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->lang() < b->lang(); });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i]->lang() == sorted[i - 1]->lang()) {
      throw Error(ErrorCode::InvalidArgument, "duplicate profile for " + sorted[i]->lang().str());
    }
  }

  for (std::uint32_t idx = 0; idx < sorted.size(); ++idx) {
    const DetectorProfile& p = *sorted[idx];
    langs_.push_back(p.lang());
    const double denom = static_cast<double>(p.total()) + static_cast<double>(p.vocabulary_size());
    unseen_logp_.push_back(-std::log(denom));
    // log((c+1)/denom) - log(1/denom) = log(c+1)
    for (const auto& [gram, c] : p.ngram_counts()) {
      table_[gram].seen.emplace_back(idx, std::log(static_cast<double>(c) + 1.0));
    }
  }
}

std::vector<double> NgramClassifier::scores(std::string_view unit) const {
  const auto grams = extract_ngrams(unit);
  std::vector<double> out(langs_.size());
  for (std::size_t i = 0; i < langs_.size(); ++i) out[i] = static_cast<double>(grams.size()) * unseen_logp_[i];
  for (const auto& g : grams) {
    const auto it = table_.find(g);
    if (it == table_.end()) continue;
    for (const auto& [idx, delta] : it->second.seen) out[idx] += delta;
  }
  return out;
}

DetectionResult NgramClassifier::classify(std::string_view unit, const LanguageSet* candidates) const {
  if (count_letters(unit) == 0) return DetectionResult::unidentified();

  std::vector<std::size_t> allowed;
  for (std::size_t i = 0; i < langs_.size(); ++i) {
    if (!candidates || candidates->contains(langs_[i])) allowed.push_back(i);
  }
  if (allowed.empty()) return DetectionResult::unidentified();

  if (options_.abstain_on_unseen) {
    const auto grams = extract_ngrams(unit);
    const bool any_seen = std::any_of(grams.begin(), grams.end(), [&](const auto& g) { return table_.contains(g); });
    if (!any_seen) return DetectionResult::unidentified();
  }

  const std::vector<double> all = scores(unit);
  // Strict comparison keeps the first (smallest tag) among equal scores.
  std::size_t best = allowed.front();
  for (auto i : allowed) {
    if (all[i] > all[best]) best = i;
  }
  double runner_up = -std::numeric_limits<double>::infinity();
  for (auto i : allowed) {
    if (i != best) runner_up = std::max(runner_up, all[i]);
  }
  if (allowed.size() > 1 && all[best] - runner_up < options_.margin) return DetectionResult::unidentified();

  double z = 0.0;
  for (auto i : allowed) z += std::exp(all[i] - all[best]);
  return DetectionResult{langs_[best], 1.0 / z};
}

DetectionResult classify_ngram(std::string_view unit, std::span<const DetectorProfile> profiles, NgramOptions options) {
  return NgramClassifier(profiles, options).classify(unit);
}

NgramDetector::NgramDetector(std::span<const DetectorProfile> profiles, NgramOptions options)
    : classifier_(profiles, options), supported_(classifier_.languages().begin(), classifier_.languages().end()) {}

DetectionResult NgramDetector::classify(std::string_view unit, const LanguageSet* candidates) const {
  return classifier_.classify(unit, candidates);
}

}  // namespace langconf::lid
