#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "langconf/language_tag.hpp"
#include "langconf/record.hpp"

namespace langconf::lid {

/// Outcome for one text unit. `lang` absent means unidentified. Confidence is
/// only comparable between results of the same detector.
struct DetectionResult {
  std::optional<LanguageTag> lang;
  double confidence = 0.0;

  bool identified() const noexcept { return lang.has_value(); }
  static DetectionResult unidentified() { return {}; }
};

/// A language identifier that can take part in a DetectorChain.
class Detector {
 public:
  virtual ~Detector() = default;

  virtual std::string name() const = 0;
  virtual const LanguageSet& supported() const = 0;

  /// `candidates`, when given, is already intersected with supported().
  virtual DetectionResult classify(std::string_view unit, const LanguageSet* candidates) const = 0;
};

/// Ordered detectors; the first one to identify a language it supports wins.
class DetectorChain {
 public:
  explicit DetectorChain(std::vector<std::shared_ptr<const Detector>> detectors);

  const std::vector<std::shared_ptr<const Detector>>& detectors() const noexcept { return detectors_; }
  LanguageSet supported() const;

 private:
  std::vector<std::shared_ptr<const Detector>> detectors_;
};

DetectionResult detect_unit(std::string_view unit, const DetectorChain& chain,
                            const std::optional<LanguageSet>& candidates = std::nullopt);

}  // namespace langconf::lid
