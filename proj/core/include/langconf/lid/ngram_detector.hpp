#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "langconf/lid/detector.hpp"
#include "langconf/lid/profile.hpp"

namespace langconf::lid {

struct NgramOptions {
  /// Required log-score lead of the winner over the runner-up. 0 always identifies.
  double margin = 0.0;
  /// Abstain when none of the unit's n-grams occurs in any profile.
  bool abstain_on_unseen = false;
};

/// Naive-Bayes scorer over a fixed profile set.
///
/// Each profile scores a unit by Σ log((count(g) + 1) / (total + V)) over the
/// unit's n-grams g, V being the profile's n-gram vocabulary size. Profiles are
/// kept sorted by tag so that ties resolve to the smallest code.
class NgramClassifier {
 public:
  explicit NgramClassifier(std::span<const DetectorProfile> profiles, NgramOptions options = {});

  DetectionResult classify(std::string_view unit, const LanguageSet* candidates = nullptr) const;

  /// Per-profile log-likelihood, in languages() order.
  std::vector<double> scores(std::string_view unit) const;

  const std::vector<LanguageTag>& languages() const noexcept { return langs_; }
  const NgramOptions& options() const noexcept { return options_; }

 private:
  struct Entry {
    std::vector<std::pair<std::uint32_t, double>> seen;  // profile index -> log p - unseen log p
  };

  std::vector<LanguageTag> langs_;
  std::vector<double> unseen_logp_;
  std::unordered_map<std::string, Entry> table_;
  NgramOptions options_;
};

/// Throws NoProfiles when `profiles` is empty.
DetectionResult classify_ngram(std::string_view unit, std::span<const DetectorProfile> profiles,
                               NgramOptions options = {});

class NgramDetector final : public Detector {
 public:
  NgramDetector(std::span<const DetectorProfile> profiles, NgramOptions options = {});

  std::string name() const override { return "ngram"; }
  const LanguageSet& supported() const override { return supported_; }
  DetectionResult classify(std::string_view unit, const LanguageSet* candidates) const override;

 private:
  NgramClassifier classifier_;
  LanguageSet supported_;
};

}  // namespace langconf::lid
