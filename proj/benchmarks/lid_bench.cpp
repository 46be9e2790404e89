#include <benchmark/benchmark.h>

#include <filesystem>

#include "langconf/file_io.hpp"
#include "langconf/lid/ngram_detector.hpp"
#include "langconf/lid/profile.hpp"
#include "langconf/lid/tokenize.hpp"

using namespace langconf;

namespace {

const std::filesystem::path kSeed = std::filesystem::path(LANGCONF_BENCH_DATA_DIR) / "seed";

const std::vector<lid::DetectorProfile>& profiles() {
  static const auto p = lid::train_profiles_from_seed_dir(kSeed, 4);
  return p;
}

const std::vector<std::string>& german() {
  static const auto lines = lid::split_lines(read_text_file(kSeed / "deu.txt"));
  return lines;
}

void BM_Tokenize(benchmark::State& state) {
  const auto& lines = german();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lid::tokenize(lines[i++ % lines.size()]));
}
BENCHMARK(BM_Tokenize);

void BM_ClassifyLine(benchmark::State& state) {
  lid::NgramClassifier classifier(profiles());
  const auto& lines = german();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classifier.classify(lines[i++ % lines.size()]));
}
BENCHMARK(BM_ClassifyLine);

}  // namespace
