#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "generators.hpp"
#include "langconf/divergence/kl.hpp"
#include "langconf/error.hpp"
#include "oracles.hpp"

using namespace langconf;
using namespace langconf::divergence;

namespace {

LabeledMatrix labeled(std::vector<const char*> rows, std::vector<const char*> cols, std::vector<double> v) {
  std::vector<LanguageTag> r, c;
  for (auto x : rows) r.emplace_back(x);
  for (auto x : cols) c.emplace_back(x);
  return LabeledMatrix(r, c, std::move(v));
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

std::vector<std::vector<double>> permuted(const std::vector<std::vector<double>>& m, const std::vector<std::size_t>& rp,
                                          const std::vector<std::size_t>& cp) {
  std::vector<std::vector<double>> out(m.size(), std::vector<double>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) out[i][j] = m[rp[i]][cp[j]];
  return out;
}

}  // namespace

TEST(KlColumn, Examples) {
  std::vector<double> p = {0.5, 0.5}, q = {0.9, 0.1};
  EXPECT_NEAR(kl_column(p, q), 0.5 * std::log(0.5 / 0.9) + 0.5 * std::log(0.5 / 0.1), 1e-9);
  EXPECT_NEAR(kl_column(p, q), 0.510826, 5e-7);
  std::vector<double> same = {0.3, 0.7};
  EXPECT_NEAR(kl_column(same, same), 0.0, 1e-9);
  std::vector<double> pz = {0.2, 0.0, 0.8}, qz = {0.1, 0.5, 0.4};
  EXPECT_NEAR(kl_column(pz, qz), 0.0, 1e-9);
}

TEST(KlColumn, Errors) {
  std::vector<double> a = {0.5, 0.5}, b = {1.0}, zero = {0.0, 0.0}, neg = {-0.1, 1.0};
  EXPECT_EQ(code_of([&] { kl_column(a, b); }), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([&] { kl_column(zero, a); }), ErrorCode::AllZeroColumn);
  EXPECT_EQ(code_of([&] { kl_column(a, neg); }), ErrorCode::InvalidArgument);
}

TEST(KlColumn, ZeroSimilarityColumnStaysUnnormalized) {
  std::vector<double> p = {0.5, 0.5}, q = {0.0, 0.0};
  EXPECT_NEAR(kl_column(p, q), oracle::kl_column(p, q), 1e-12);
  EXPECT_NEAR(kl_column(p, q), 2.0 * (0.5 + 1e-10) * std::log((0.5 + 1e-10) / 1e-10), 1e-9);
}

TEST(Align, Intersections) {
  auto m1 = labeled({"aaa", "bbb", "ccc"}, {"xxx"}, {1, 2, 3});
  auto m2 = labeled({"bbb", "ccc", "ddd"}, {"xxx", "yyy"}, {4, 5, 6, 7, 8, 9});
  auto a = align_matrices(m1, m2);
  EXPECT_EQ(a.confusion.row_labels(), (std::vector<LanguageTag>{LanguageTag("bbb"), LanguageTag("ccc")}));
  EXPECT_EQ(a.similarity.row_labels(), a.confusion.row_labels());
  EXPECT_EQ(a.similarity.col_labels(), std::vector<LanguageTag>{LanguageTag("xxx")});
  EXPECT_DOUBLE_EQ(a.similarity.at(1, 0), 6.0);
  EXPECT_EQ(a.coverage.rows_only_in_confusion, std::vector<LanguageTag>{LanguageTag("aaa")});
  EXPECT_EQ(a.coverage.rows_only_in_similarity, std::vector<LanguageTag>{LanguageTag("ddd")});
  EXPECT_EQ(a.coverage.cols_only_in_similarity, std::vector<LanguageTag>{LanguageTag("yyy")});

  auto same = align_matrices(m1, m1);
  EXPECT_EQ(same.confusion.row_labels(), m1.row_labels());
  auto disjoint = labeled({"zzz"}, {"xxx"}, {1});
  EXPECT_EQ(code_of([&] { align_matrices(m1, disjoint); }), ErrorCode::NoOverlap);
}

TEST(KlMatrix, Examples) {
  auto stochastic = labeled({"aaa", "bbb", "ccc"}, {"aaa", "bbb", "ccc"}, {0.2, 0.5, 0.1, 0.3, 0.25, 0.6, 0.5, 0.25, 0.3});
  EXPECT_NEAR(kl_matrix_divergence(stochastic, stochastic).mean_kl, 0.0, 1e-9);

  auto m1 = labeled({"aaa", "bbb"}, {"xxx", "yyy"}, {0.5, 0.3, 0.5, 0.7});
  auto m2 = labeled({"aaa", "bbb"}, {"xxx", "yyy"}, {0.9, 0.3, 0.1, 0.7});
  auto r = kl_matrix_divergence(m1, m2);
  EXPECT_NEAR(r.per_column.at(LanguageTag("xxx")), 0.510826, 5e-7);
  EXPECT_NEAR(r.per_column.at(LanguageTag("yyy")), 0.0, 1e-9);
  EXPECT_NEAR(r.mean_kl, 0.255413, 5e-7);

  auto with_zero = labeled({"aaa", "bbb"}, {"xxx", "yyy", "zzz"}, {0.5, 0.3, 0.0, 0.5, 0.7, 0.0});
  auto q = labeled({"aaa", "bbb"}, {"xxx", "yyy", "zzz"}, {0.9, 0.3, 0.5, 0.1, 0.7, 0.5});
  r = kl_matrix_divergence(with_zero, q);
  EXPECT_EQ(r.per_column.size(), 2u);
  EXPECT_EQ(r.skipped_columns, LanguageSet{LanguageTag("zzz")});
  EXPECT_NEAR(r.mean_kl, 0.255413, 5e-7);
}

TEST(KlMatrix, Errors) {
  auto zeros = labeled({"aaa"}, {"xxx"}, {0.0});
  EXPECT_EQ(code_of([&] { kl_matrix_divergence(zeros, zeros); }), ErrorCode::AllColumnsSkipped);
  auto a = labeled({"aaa"}, {"xxx"}, {1.0});
  auto b = labeled({"bbb"}, {"xxx"}, {1.0});
  EXPECT_EQ(code_of([&] { kl_matrix_divergence(a, b); }), ErrorCode::DimensionMismatch);
}

TEST(KlMatrix, Reports) {
  auto m1 = labeled({"aaa", "bbb"}, {"xxx", "yyy"}, {0.5, 0.0, 0.5, 0.0});
  auto m2 = labeled({"aaa", "bbb"}, {"xxx", "yyy"}, {0.9, 0.3, 0.1, 0.7});
  auto r = kl_matrix_divergence(m1, m2);
  EXPECT_EQ(kl_report_csv(r, "g"), "name,mean_kl,columns,skipped\ng,0.510826,1,1\n");
  auto json = kl_report_json(r, "g");
  EXPECT_NE(json.find("\"skipped_columns\""), std::string::npos);
  EXPECT_NE(json.find("yyy"), std::string::npos);
}

TEST(KlProperty, MatchesOracleOnRandomMatrices) {
  gen::Rng rng(701);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t rows = 1 + gen::uniform_index(rng, 30), cols = 1 + gen::uniform_index(rng, 30);
    auto a = gen::sparse_matrix(rng, rows, cols, 0.2);
    auto b = gen::sparse_matrix(rng, rows, cols, 0.2);
    std::size_t used = 0;
    const double expected = oracle::kl_matrix(a, b, &used);
    if (used == 0) {
      EXPECT_THROW(kl_matrix_divergence(gen::to_matrix(a), gen::to_matrix(b)), Error);
      continue;
    }
    auto r = kl_matrix_divergence(gen::to_matrix(a), gen::to_matrix(b));
    EXPECT_NEAR(r.mean_kl, expected, 1e-12);
    EXPECT_EQ(r.per_column.size(), used);
    EXPECT_EQ(r.per_column.size() + r.skipped_columns.size(), cols);
  }
}

TEST(KlProperty, NonNegativeAndScaleInvariant) {
  gen::Rng rng(702);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + gen::uniform_index(rng, 20);
    auto m = gen::sparse_matrix(rng, 2, n, 0.2);
    std::vector<double> p = m[0], q = m[1];
    p[gen::uniform_index(rng, n)] = gen::uniform(rng, 0.1, 1.0);
    const double base = kl_column(p, q);
    EXPECT_GE(base, -1e-9);
    const double sp = gen::uniform(rng, 0.01, 100.0), sq = gen::uniform(rng, 0.01, 100.0);
    std::vector<double> p2 = p, q2 = q;
    for (auto& x : p2) x *= sp;
    for (auto& x : q2) x *= sq;
    EXPECT_NEAR(kl_column(p2, q2), base, 1e-9 * std::max(1.0, base));
    EXPECT_NEAR(kl_column(p, p), 0.0, 1e-9);
  }
}

TEST(KlProperty, InvariantUnderJointPermutation) {
  gen::Rng rng(703);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 2 + gen::uniform_index(rng, 10), cols = 2 + gen::uniform_index(rng, 10);
    auto a = gen::sparse_matrix(rng, rows, cols, 0.2);
    auto b = gen::sparse_matrix(rng, rows, cols, 0.2);
    a[0][0] = 0.5;
    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    const double base = kl_matrix_divergence(gen::to_matrix(a), gen::to_matrix(b)).mean_kl;
    const double perm = kl_matrix_divergence(gen::to_matrix(permuted(a, rp, cp)), gen::to_matrix(permuted(b, rp, cp))).mean_kl;
    EXPECT_NEAR(perm, base, 1e-12);
  }
}
