#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "langconf/error.hpp"
#include "langconf/file_io.hpp"
#include "langconf/pipeline/analysis.hpp"
#include "langconf/pipeline/config.hpp"
#include "langconf/pipeline/distribution_io.hpp"
#include "langconf/pipeline/ingest.hpp"
#include "langconf/pipeline/run.hpp"

using namespace langconf;
using namespace langconf::pipeline;
namespace fs = std::filesystem;

namespace {

const fs::path kData = LANGCONF_TEST_DATA_DIR;

std::string generic_line(int i, const std::string& text = "Guten Tag") {
  return R"({"id":"g)" + std::to_string(i) +
         R"(","model":"m","dataset":"d","setting":"monolingual","task":"prompting","target_lang":"deu","context_langs":["deu"],"response_text":")" +
         text + "\"}";
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

class Scratch : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("langconf_pipeline_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  PipelineConfig sample_config(const fs::path& out) const {
    auto c = load_config(kData / "sample" / "pipeline.json");
    c.output_dir = out;
    return c;
  }
  fs::path dir_;
};

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) out[e.path().filename().string()] = read_text_file(e.path());
  return out;
}

std::string without_timestamp(const std::string& manifest) {
  std::istringstream in(manifest);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.find("\"generated_at\"") == std::string::npos) out += line + "\n";
  }
  return out;
}

}  // namespace

TEST(Ingest, GenericLines) {
  std::string text = generic_line(1) + "\n" + generic_line(2) + "\n\n" + generic_line(3) + "\n";
  auto r = ingest_text(text, InputFormat::GenericJsonl);
  EXPECT_EQ(r.records.size(), 3u);
  EXPECT_TRUE(r.malformed.empty());
  EXPECT_EQ(r.records[0].target_lang, LanguageTag("deu"));
}

TEST(Ingest, MalformedThreshold) {
  std::string text;
  for (int i = 0; i < 99; ++i) text += generic_line(i) + "\n";
  text += "{not json\n";
  auto r = ingest_text(text, InputFormat::GenericJsonl);
  EXPECT_EQ(r.records.size(), 99u);
  ASSERT_EQ(r.malformed.size(), 1u);
  EXPECT_EQ(r.malformed[0].line_no, 100u);

  std::string bad;
  for (int i = 0; i < 50; ++i) bad += generic_line(i) + "\n{}\n";
  EXPECT_EQ(code_of([&] { ingest_text(bad, InputFormat::GenericJsonl); }), ErrorCode::TooManyMalformed);
  EXPECT_EQ(code_of([] { ingest("/nonexistent/file.jsonl", InputFormat::GenericJsonl); }), ErrorCode::FileNotFound);
}

TEST(Ingest, RejectsDuplicatesAndInvalidRecords) {
  std::string text;
  for (int i = 0; i < 20; ++i) text += generic_line(i) + "\n";
  text += generic_line(3) + "\n";
  auto r = ingest_text(text, InputFormat::GenericJsonl);
  EXPECT_EQ(r.records.size(), 20u);
  EXPECT_EQ(r.malformed.size(), 1u);
}

TEST(Ingest, FlagsEmptyResponses) {
  auto r = ingest_text(generic_line(1, ""), InputFormat::GenericJsonl);
  EXPECT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(Ingest, SourceSpecificFormats) {
  auto lcb = ingest_text(
      R"({"id":7,"model":"m","source":"okapi","language":"ja","setting":"crosslingual","completion":"こんにちは"})",
      InputFormat::LcbJsonl);
  ASSERT_EQ(lcb.records.size(), 1u);
  EXPECT_EQ(lcb.records[0].id, "7");
  EXPECT_EQ(lcb.records[0].target_lang, LanguageTag("jpn"));
  EXPECT_EQ(lcb.records[0].context_langs, LanguageSet{LanguageTag("eng")});
  EXPECT_EQ(lcb.records[0].task, Task::Prompting);

  auto mtei = ingest_text(
      R"({"id":"x","model":"me5","train_langs":["de","fr"],"eval_lang":"en","eval_step":"step2","prediction":"hello"})",
      InputFormat::MteiJsonl);
  ASSERT_EQ(mtei.records.size(), 1u);
  EXPECT_EQ(mtei.records[0].setting, Setting::Crosslingual);
  EXPECT_EQ(mtei.records[0].task, Task::Inversion);
  EXPECT_EQ(mtei.records[0].eval_step, std::optional<std::string>("step2"));
}

TEST(Ingest, GenericRoundTrip) {
  auto r = ingest_text(generic_line(5, "Hallo\\nWelt"), InputFormat::GenericJsonl).records.at(0);
  auto again = ingest_text(to_generic_jsonl(r), InputFormat::GenericJsonl).records.at(0);
  EXPECT_EQ(again.response_text, "Hallo\nWelt");
  EXPECT_EQ(to_generic_jsonl(again), to_generic_jsonl(r));
}

TEST(Config, RoundTripsLosslessly) {
  auto c = load_config(kData / "sample" / "pipeline.json");
  EXPECT_EQ(c.graphs.size(), 3u);
  EXPECT_EQ(c.seed, 13u);
  auto again = parse_config(config_to_json(c), "/elsewhere");
  EXPECT_EQ(again, c);
  EXPECT_EQ(config_hash(again), config_hash(c));
  EXPECT_EQ(config_hash(c).size(), 64u);
  auto moved = c;
  moved.output_dir = "/tmp/elsewhere";
  EXPECT_EQ(config_hash(moved), config_hash(c));
  auto reseeded = c;
  reseeded.seed = c.seed + 1;
  EXPECT_NE(config_hash(reseeded), config_hash(c));
}

TEST(Config, RejectsUnknownKeysAndValues) {
  EXPECT_EQ(code_of([] { parse_config(R"({"inputs":[],"output_dir":"o","colour":1})", "/"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { parse_config(R"({"inputs":[],"output_dir":"o","log_base":"ten"})", "/"); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { parse_config("[", "/"); }), ErrorCode::InvalidArgument);
}

TEST_F(Scratch, PreflightCatchesMissingProfiles) {
  auto c = sample_config(dir_ / "out");
  c.detectors[0].seed.reset();
  c.detectors[0].profiles = dir_ / "no_such_dir";
  EXPECT_EQ(code_of([&] { run_pipeline(c); }), ErrorCode::FileNotFound);
  EXPECT_FALSE(fs::exists(dir_ / "out"));
  try {
    run_pipeline(c);
  } catch (const Error& e) {
    EXPECT_EQ(exit_code_for(e), 1);
  }
}

TEST_F(Scratch, ProfileDirFromEnvironment) {
  auto c = sample_config(dir_ / "out");
  c.detectors[0].seed.reset();
  ::unsetenv(kProfileDirEnv);
  EXPECT_EQ(code_of([&] { validate_config(c); }), ErrorCode::InvalidArgument);
  ::setenv(kProfileDirEnv, dir_.c_str(), 1);
  validate_config(c);
  ::unsetenv(kProfileDirEnv);
}

TEST_F(Scratch, EmptyCorpusWritesNothing) {
  auto c = sample_config(dir_ / "out");
  std::ofstream(dir_ / "empty.jsonl") << "\n";
  c.inputs = {{dir_ / "empty.jsonl", InputFormat::GenericJsonl}};
  try {
    run_pipeline(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
    EXPECT_EQ(exit_code_for(e), 2);
  }
  EXPECT_FALSE(fs::exists(dir_ / "out"));
}

TEST_F(Scratch, SampleRunIsDeterministic) {
  auto first = run_pipeline(sample_config(dir_ / "a"));
  auto second = run_pipeline(sample_config(dir_ / "b"));
  EXPECT_EQ(first.records, 60u);
  EXPECT_EQ(first.excluded, 1u);
  EXPECT_EQ(first.artifacts, second.artifacts);
  auto a = read_dir(dir_ / "a"), b = read_dir(dir_ / "b");
  ASSERT_EQ(a.size(), first.artifacts.size());
  for (const auto& name : first.artifacts) {
    ASSERT_TRUE(a.contains(name)) << name;
    if (name == "manifest.json") {
      EXPECT_EQ(without_timestamp(a[name]), without_timestamp(b[name]));
    } else {
      EXPECT_EQ(a[name], b[name]) << name;
    }
  }
  for (const char* required : {"distributions.jsonl", "entropy_records.csv", "entropy_summary.csv", "passrate.csv",
                               "confusion_all_line.csv", "similarity_multivalued.csv", "kl_summary.csv",
                               "correlations.csv", "manifest.json"}) {
    EXPECT_TRUE(a.contains(required)) << required;
  }
  const auto& manifest = a["manifest.json"];
  for (const char* key : {"\"config_hash\"", "\"version\"", "\"log_base\"", "\"zero_probability\"", "\"wpr_mode\""}) {
    EXPECT_NE(manifest.find(key), std::string::npos) << key;
  }
}

TEST(Analysis, ScoredRecordsRoundTrip) {
  GenerationRecord r;
  r.id = "a";
  r.model = "m";
  r.dataset = "d";
  r.target_lang = LanguageTag("deu");
  r.context_langs = {LanguageTag("deu")};
  r.eval_step = "s1";
  ScoredRecord s{r, LanguageDistribution(Granularity::Line, {{LanguageTag("deu"), 2.0 / 3.0}}, 1.0 / 3.0, 3),
                 LanguageDistribution::empty(Granularity::Word)};
  auto text = write_scored_records({s});
  auto back = read_scored_records(text);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].line.mass(), s.line.mass());
  EXPECT_EQ(back[0].record.eval_step, r.eval_step);
  EXPECT_EQ(write_scored_records(back), text);
}

TEST(Analysis, CorrelationTableFromCsv) {
  std::string csv = "setting,a,b\nmono,1,1\nmono,2,3\nmono,3,2\ncross,4,5\ncross,5,4\ncross,NA,1\n";
  auto t = metric_table_from_csv(csv, {"a", "b"}, "setting");
  auto rows = correlate(t, {});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].subset, "all");
  EXPECT_EQ(rows[0].n, 5u);
  ASSERT_TRUE(rows[0].result.has_value());
  EXPECT_NEAR(rows[0].result->rho, 0.8, 1e-12);
  EXPECT_EQ(rows[1].subset, "cross");
  EXPECT_FALSE(rows[1].result.has_value());
  EXPECT_EQ(rows[1].note, "fewer than 3 complete rows");
  auto out = correlations_to_csv(rows);
  EXPECT_EQ(out.substr(0, out.find('\n')), "subset,x,y,n,rho,p_value,stars,method,note");
  EXPECT_EQ(code_of([&] { metric_table_from_csv(csv, {"a", "zz"}, ""); }), ErrorCode::ParseError);
}
