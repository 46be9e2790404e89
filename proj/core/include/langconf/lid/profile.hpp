#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "langconf/language_tag.hpp"

namespace langconf::lid {

inline constexpr int kMaxNgramOrder = 4;
inline constexpr std::size_t kMinTrainingLetters = 1000;

/// Character 1..4-grams of lowercased letter runs, each run padded with one
/// space on either side. The lone-space unigram is not emitted.
std::vector<std::string> extract_ngrams(std::string_view text);

/// Number of letters (general category L) in text.
std::size_t count_letters(std::string_view text);

/// Character n-gram counts for one language.
class DetectorProfile {
 public:
  using Counts = std::map<std::string, std::uint64_t, std::less<>>;

  /// Throws InvalidArgument when a count is zero or counts are empty.
  DetectorProfile(LanguageTag lang, Counts counts);

  const LanguageTag& lang() const noexcept { return lang_; }
  const Counts& ngram_counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return total_; }
  std::size_t vocabulary_size() const noexcept { return counts_.size(); }

  std::uint64_t count(std::string_view ngram) const;

  /// Top-k n-grams of one order, by count descending then lexicographically.
  std::vector<std::string> top_ngrams(int order, std::size_t k) const;

  std::string to_json() const;
  static DetectorProfile from_json(std::string_view json);

 private:
  LanguageTag lang_;
  Counts counts_;
  std::uint64_t total_ = 0;
};

/// Throws CorpusTooSmall when the corpus has fewer than 1000 letters.
DetectorProfile train_profile(std::string_view corpus, const LanguageTag& lang);

/// Trains one profile per `<iso639_3>.txt` file in the directory. When
/// `holdout_every` > 0, every holdout_every-th line (1-based) is left out.
std::vector<DetectorProfile> train_profiles_from_seed_dir(const std::filesystem::path& dir, std::size_t holdout_every = 0);

/// Profiles live one per file as `<tag>.profile.json`.
void save_profiles(const std::vector<DetectorProfile>& profiles, const std::filesystem::path& dir);
std::vector<DetectorProfile> load_profiles(const std::filesystem::path& dir);

}  // namespace langconf::lid
