#include "langconf/lid/profile.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>
#include "langconf/error.hpp"
#include "langconf/file_io.hpp"
#include "langconf/lid/unicode.hpp"

namespace langconf::lid {
namespace {

constexpr std::string_view kFormat = "langconf-profile";
constexpr int kVersion = 1;
constexpr std::string_view kProfileSuffix = ".profile.json";

}  // namespace

std::vector<std::string> extract_ngrams(std::string_view text) {
  std::vector<std::string> grams;
  std::u32string padded;
  auto emit_word = [&] {
    if (padded.size() <= 1) return;
    padded.push_back(U' ');
    for (int n = 1; n <= kMaxNgramOrder; ++n) {
      const auto len = static_cast<std::size_t>(n);
      for (std::size_t i = 0; i + len <= padded.size(); ++i) {
        if (n == 1 && padded[i] == U' ') continue;
        grams.push_back(encode_utf8(std::u32string_view(padded).substr(i, len)));
      }
    }
  };
  padded = U" ";
  for (char32_t c : decode_utf8(text)) {
    if (is_letter(c) || is_mark(c)) {
      padded.push_back(to_lower(c));
    } else {
      emit_word();
      padded = U" ";
    }
  }
  emit_word();
  return grams;
}

std::size_t count_letters(std::string_view text) {
  const auto decoded = decode_utf8(text);
  return static_cast<std::size_t>(std::count_if(decoded.begin(), decoded.end(), [](char32_t c) { return is_letter(c); }));
}

DetectorProfile::DetectorProfile(LanguageTag lang, Counts counts) : lang_(std::move(lang)), counts_(std::move(counts)) {
  if (counts_.empty()) throw Error(ErrorCode::InvalidArgument, "profile for " + lang_.str() + " has no n-grams");
  for (const auto& [gram, c] : counts_) {
    if (c == 0) throw Error(ErrorCode::InvalidArgument, "zero count for n-gram '" + gram + "'");
    total_ += c;
  }
}

std::uint64_t DetectorProfile::count(std::string_view ngram) const {
  const auto it = counts_.find(ngram);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::string> DetectorProfile::top_ngrams(int order, std::size_t k) const {
  std::vector<std::pair<std::string, std::uint64_t>> matching;
  for (const auto& [gram, c] : counts_) {
    if (decode_utf8(gram).size() == static_cast<std::size_t>(order)) matching.emplace_back(gram, c);
  }
  std::stable_sort(matching.begin(), matching.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::min(k, matching.size()); ++i) out.push_back(matching[i].first);
  return out;
}

std::string DetectorProfile::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["lang"] = lang_.str();
  j["total"] = total_;
  nlohmann::ordered_json grams = nlohmann::ordered_json::object();
  for (const auto& [gram, c] : counts_) grams[gram] = c;
  j["ngrams"] = std::move(grams);
  return j.dump() + "\n";
}

DetectorProfile DetectorProfile::from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("profile: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kFormat) throw Error(ErrorCode::ParseError, "not a langconf profile");
    if (j.at("version").get<int>() != kVersion) throw Error(ErrorCode::ParseError, "unsupported profile version");
    Counts counts;
    for (const auto& [gram, c] : j.at("ngrams").items()) counts.emplace(gram, c.get<std::uint64_t>());
    DetectorProfile profile(LanguageTag::parse(j.at("lang").get<std::string>()), std::move(counts));
    if (profile.total() != j.at("total").get<std::uint64_t>()) {
      throw Error(ErrorCode::ParseError, "profile total does not match its counts");
    }
    return profile;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("profile: ") + e.what());
  }
}

DetectorProfile train_profile(std::string_view corpus, const LanguageTag& lang) {
  const std::size_t letters = count_letters(corpus);
  if (letters < kMinTrainingLetters) {
    throw Error(ErrorCode::CorpusTooSmall,
                lang.str() + " corpus has " + std::to_string(letters) + " letters, need " +
                    std::to_string(kMinTrainingLetters));
  }
  DetectorProfile::Counts counts;
  for (auto& gram : extract_ngrams(corpus)) ++counts[std::move(gram)];
  return DetectorProfile(lang, std::move(counts));
}

std::vector<DetectorProfile> train_profiles_from_seed_dir(const std::filesystem::path& dir, std::size_t holdout_every) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::FileNotFound, "seed directory " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<DetectorProfile> profiles;
  for (const auto& file : files) {
    const LanguageTag lang = LanguageTag::parse(file.stem().string());
    std::istringstream in(read_text_file(file));
    std::string corpus, line;
    std::size_t index = 0;
    while (std::getline(in, line)) {
      ++index;
      if (holdout_every > 0 && index % holdout_every == 0) continue;
      corpus += line;
      corpus += '\n';
    }
    profiles.push_back(train_profile(corpus, lang));
  }
  if (profiles.empty()) throw Error(ErrorCode::NoProfiles, "no <lang>.txt files in " + dir.string());
  return profiles;
}

void save_profiles(const std::vector<DetectorProfile>& profiles, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& p : profiles) {
    write_file_atomic(dir / (p.lang().str() + std::string(kProfileSuffix)), p.to_json());
  }
}

std::vector<DetectorProfile> load_profiles(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::FileNotFound, "profile directory " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().filename().string().ends_with(kProfileSuffix)) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<DetectorProfile> profiles;
  for (const auto& f : files) profiles.push_back(DetectorProfile::from_json(read_text_file(f)));
  if (profiles.empty()) throw Error(ErrorCode::NoProfiles, "no *.profile.json files in " + dir.string());
  return profiles;
}

}  // namespace langconf::lid
