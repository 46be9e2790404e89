#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "langconf/distribution.hpp"
#include "langconf/error.hpp"
#include "langconf/format.hpp"
#include "langconf/labeled_matrix.hpp"
#include "langconf/language_codes.hpp"
#include "langconf/language_tag.hpp"
#include "langconf/metrics/entropy.hpp"
#include "langconf/record.hpp"

using namespace langconf;

namespace {

LanguageDistribution line(LanguageDistribution::MassMap mass, double unidentified = 0.0, std::size_t units = 1) {
  return LanguageDistribution(Granularity::Line, std::move(mass), unidentified, units);
}

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no langconf::Error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(LanguageTag, NormalizesCase) {
  EXPECT_EQ(LanguageTag::parse("DEU"), LanguageTag("deu"));
  EXPECT_EQ(LanguageTag::parse("cmn_hans").str(), "cmn-Hans");
  EXPECT_EQ(code_of([] { LanguageTag("de"); }), ErrorCode::InvalidLanguageTag);
  EXPECT_EQ(code_of([] { LanguageTag("deu", std::string_view("Lat")); }), ErrorCode::InvalidLanguageTag);
  EXPECT_FALSE(LanguageTag::try_parse("12x").has_value());
}

TEST(LanguageCodes, MapsDetectorLabels) {
  EXPECT_EQ(normalize_language_code("de"), LanguageTag("deu"));
  EXPECT_EQ(normalize_language_code("__label__fr"), LanguageTag("fra"));
  EXPECT_EQ(normalize_language_code("zh"), LanguageTag("cmn"));
  EXPECT_EQ(normalize_language_code("ar"), LanguageTag("arb"));
  EXPECT_EQ(normalize_language_code("ger"), LanguageTag("deu"));
  EXPECT_EQ(normalize_language_code("pt_BR"), LanguageTag("por"));
  EXPECT_FALSE(normalize_language_code("?!").has_value());
  EXPECT_TRUE(uses_non_latin_script(LanguageTag("jpn")));
  EXPECT_TRUE(uses_non_latin_script(LanguageTag("hin")));
  EXPECT_FALSE(uses_non_latin_script(LanguageTag("tur")));
  EXPECT_TRUE(is_cjk_language(LanguageTag("kor")));
  EXPECT_FALSE(is_cjk_language(LanguageTag("rus")));
}

TEST(Distribution, NormalizeDividesByIdentifiedMass) {
  auto d = normalize_distribution(line({{LanguageTag("deu"), 0.94}, {LanguageTag("eng"), 0.04}}, 0.02));
  EXPECT_NEAR(d.probability(LanguageTag("deu")), 0.94 / 0.98, 1e-12);
  EXPECT_NEAR(d.probability(LanguageTag("eng")), 0.04 / 0.98, 1e-12);
  EXPECT_NEAR(d.probability(LanguageTag("deu")), 0.959184, 1e-6);
  EXPECT_NEAR(d.probability(LanguageTag("eng")), 0.040816, 1e-6);
  EXPECT_DOUBLE_EQ(d.unidentified_mass(), 0.02);
}

TEST(Distribution, NormalizeIdentityAndDegenerate) {
  auto d = normalize_distribution(line({{LanguageTag("deu"), 1.0}}));
  EXPECT_DOUBLE_EQ(d.probability(LanguageTag("deu")), 1.0);
  EXPECT_EQ(code_of([] { normalize_distribution(line({}, 1.0)); }), ErrorCode::AllUnidentified);
}

TEST(Distribution, RejectsBadMass) {
  EXPECT_EQ(code_of([] { line({{LanguageTag("deu"), -0.1}}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { line({{LanguageTag("deu"), NAN}}); }), ErrorCode::InvalidArgument);
}

TEST(Distribution, ZeroEntriesAreDropped) {
  auto d = line({{LanguageTag("deu"), 0.7}, {LanguageTag("fra"), 0.0}, {LanguageTag("eng"), 0.3}});
  EXPECT_EQ(d.mass().size(), 2u);
  EXPECT_FALSE(d.mass().contains(LanguageTag("fra")));
}

TEST(Distribution, Merge) {
  auto deu = line({{LanguageTag("deu"), 1.0}});
  auto fra = line({{LanguageTag("fra"), 1.0}});
  std::vector<LanguageDistribution> one = {deu};
  std::vector<double> w1 = {1.0};
  EXPECT_DOUBLE_EQ(merge_distributions(one, w1).probability(LanguageTag("deu")), 1.0);

  std::vector<LanguageDistribution> two = {deu, fra};
  std::vector<double> equal = {1.0, 1.0};
  auto m = merge_distributions(two, equal);
  EXPECT_DOUBLE_EQ(m.probability(LanguageTag("deu")), 0.5);
  EXPECT_DOUBLE_EQ(m.probability(LanguageTag("fra")), 0.5);
  EXPECT_EQ(m.unit_count(), 2u);

  std::vector<double> skew = {3.0, 1.0};
  m = merge_distributions(two, skew);
  EXPECT_DOUBLE_EQ(m.probability(LanguageTag("deu")), 0.75);
  EXPECT_DOUBLE_EQ(m.probability(LanguageTag("fra")), 0.25);
}

TEST(Distribution, MergeErrors) {
  auto deu = line({{LanguageTag("deu"), 1.0}});
  auto word = LanguageDistribution(Granularity::Word, {{LanguageTag("deu"), 1.0}}, 0.0, 1);
  std::vector<LanguageDistribution> none;
  std::vector<double> w0;
  EXPECT_EQ(code_of([&] { merge_distributions(none, w0); }), ErrorCode::EmptyInput);
  std::vector<LanguageDistribution> mixed = {deu, word};
  std::vector<double> w2 = {1.0, 1.0}, w1 = {1.0}, neg = {1.0, -1.0}, zero = {0.0, 0.0};
  EXPECT_EQ(code_of([&] { merge_distributions(mixed, w2); }), ErrorCode::MixedGranularity);
  std::vector<LanguageDistribution> two = {deu, deu};
  EXPECT_EQ(code_of([&] { merge_distributions(two, w1); }), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([&] { merge_distributions(two, neg); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { merge_distributions(two, zero); }), ErrorCode::EmptyInput);
}

TEST(DistributionProperty, NormalizeIsIdempotent) {
  gen::Rng rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    auto base = gen::distribution(rng);
    LanguageDistribution::MassMap scaled;
    const double keep = gen::uniform(rng, 0.05, 1.0);
    for (const auto& [l, m] : base.mass()) scaled[l] = m * keep;
    auto once = normalize_distribution(line(scaled, 1.0 - keep));
    auto twice = normalize_distribution(once);
    for (const auto& [l, m] : once.mass()) EXPECT_NEAR(twice.probability(l), m, 1e-12);
  }
}

TEST(DistributionProperty, MergeIgnoresWeightScale) {
  gen::Rng rng(102);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<LanguageDistribution> ds;
    std::vector<double> w, scaled;
    const double factor = gen::uniform(rng, 0.01, 100.0);
    for (std::size_t i = 0; i < 1 + gen::uniform_index(rng, 5); ++i) {
      ds.push_back(gen::distribution(rng));
      w.push_back(gen::uniform(rng, 0.1, 3.0));
      scaled.push_back(w.back() * factor);
    }
    auto a = merge_distributions(ds, w);
    auto b = merge_distributions(ds, scaled);
    ASSERT_EQ(a.mass().size(), b.mass().size());
    for (const auto& [l, m] : a.mass()) EXPECT_NEAR(b.probability(l), m, 1e-12);
  }
}

TEST(DistributionProperty, ZeroMassEntryChangesNoMetric) {
  gen::Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    auto d = gen::distribution(rng);
    auto expected = gen::expectation(rng);
    auto padded_mass = d.mass();
    for (const auto& l : gen::languages(rng, 3)) padded_mass.try_emplace(l, 0.0);
    auto padded = line(padded_mass, d.unidentified_mass(), d.unit_count());
    for (auto rule : {metrics::ZeroProbabilityRule::Support, metrics::ZeroProbabilityRule::Clamp}) {
      metrics::EntropyOptions o{metrics::LogBase::Natural, rule};
      auto a = metrics::confusion_entropy(d, expected, o);
      auto b = metrics::confusion_entropy(padded, expected, o);
      EXPECT_EQ(a.value, b.value);
      EXPECT_EQ(a.contributions, b.contributions);
    }
  }
}

TEST(Record, ExpectationSetIsTargetPlusContext) {
  GenerationRecord r;
  r.id = "x";
  r.setting = Setting::Crosslingual;
  r.target_lang = LanguageTag("hin");
  r.context_langs = {LanguageTag("eng")};
  validate_record(r);
  auto x1 = ExpectationSet::for_record(r);
  EXPECT_EQ(x1.languages(), (LanguageSet{LanguageTag("eng"), LanguageTag("hin")}));
  r.context_langs.insert(LanguageTag("hin"));
  EXPECT_EQ(code_of([&] { validate_record(r); }), ErrorCode::InvalidArgument);
  r.id.clear();
  r.setting = Setting::Monolingual;
  EXPECT_EQ(code_of([&] { validate_record(r); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { ExpectationSet(LanguageSet{}); }), ErrorCode::InvalidArgument);
}

TEST(LabeledMatrix, ValidatesAndReindexes) {
  auto m = gen::to_matrix({{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_DOUBLE_EQ(m.column_sum(1), 7.0);
  auto r = m.reindexed({LanguageTag("aab")}, {LanguageTag("aac"), LanguageTag("aaa")});
  EXPECT_DOUBLE_EQ(r.at(0, 0), 6.0);
  EXPECT_DOUBLE_EQ(r.at(0, 1), 4.0);
  EXPECT_DOUBLE_EQ(m.transposed().at(2, 1), 6.0);
  EXPECT_EQ(code_of([] { LabeledMatrix({LanguageTag("deu")}, {LanguageTag("deu")}, {1.0, 2.0}); }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { LabeledMatrix({LanguageTag("deu"), LanguageTag("deu")}, {LanguageTag("fra")}, {1.0, 2.0}); }),
            ErrorCode::InvalidArgument);
}

TEST(Format, NumbersAndCsv) {
  EXPECT_EQ(format_number(0.6931471805599453), "0.693147");
  EXPECT_EQ(format_number(23.025850929940457), "23.0259");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1e-10), "1e-10");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(split_csv_line("x,\"a,\"\"b\",3"), (std::vector<std::string>{"x", "a,\"b", "3"}));
}

TEST(Format, MatrixCsvRoundTrip) {
  auto m = gen::to_matrix({{0.5, 0.25}, {0.125, 0.0}});
  auto csv = matrix_to_csv(m);
  EXPECT_EQ(csv, "lang,aaa,aab\naaa,0.5,0.25\naab,0.125,0\n");
  auto back = matrix_from_csv(csv);
  EXPECT_EQ(back.row_labels(), m.row_labels());
  EXPECT_EQ(back.col_labels(), m.col_labels());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(back.values()[i], m.values()[i]);
  EXPECT_EQ(code_of([] { matrix_from_csv("lang,aaa\naaa,zz\n"); }), ErrorCode::ParseError);
}
