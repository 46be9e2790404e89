#pragma once

#include "langconf/lid/detector.hpp"

namespace langconf::lid {

// Rule-based fallback: identifies a language from its script when the script
// is used by one language only (Hangul -> kor, Kana -> jpn, Greek -> ell, ...).
// Abstains on shared scripts such as Latin, Cyrillic, Arabic or bare Han.
class ScriptDetector final : public Detector {
 public:
  ScriptDetector();

  std::string name() const override { return "script"; }
  const LanguageSet& supported() const override { return supported_; }
  DetectionResult classify(std::string_view unit, const LanguageSet* candidates) const override;

 private:
  LanguageSet supported_;
};

}  // namespace langconf::lid
