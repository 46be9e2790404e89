#include "langconf/lid/detector.hpp"

#include "langconf/error.hpp"

namespace langconf::lid {

DetectorChain::DetectorChain(std::vector<std::shared_ptr<const Detector>> detectors) : detectors_(std::move(detectors)) {
  if (detectors_.empty()) throw Error(ErrorCode::InvalidArgument, "detector chain must not be empty");
  for (const auto& d : detectors_) {
    if (!d) throw Error(ErrorCode::InvalidArgument, "null detector in chain");
  }
}

LanguageSet DetectorChain::supported() const {
  LanguageSet all;
  for (const auto& d : detectors_) all.insert(d->supported().begin(), d->supported().end());
  return all;
}

DetectionResult detect_unit(std::string_view unit, const DetectorChain& chain, const std::optional<LanguageSet>& candidates) {
  for (const auto& detector : chain.detectors()) {
    const LanguageSet& supported = detector->supported();
    DetectionResult result;
    if (candidates) {
      LanguageSet restricted;
      for (const auto& c : *candidates) {
        if (supported.contains(c)) restricted.insert(c);
      }
      if (restricted.empty()) continue;
      result = detector->classify(unit, &restricted);
    } else {
      result = detector->classify(unit, nullptr);
    }
    if (result.identified() && supported.contains(*result.lang)) return result;
  }
  return DetectionResult::unidentified();
}

}  // namespace langconf::lid
