#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "langconf/error.hpp"
#include "langconf/metrics/spearman.hpp"
#include "oracles.hpp"

using namespace langconf;
using namespace langconf::metrics;

TEST(Spearman, MonotoneAndReversed) {
  std::vector<double> x = {1, 2, 3}, up = {10, 20, 30}, down = {3, 2, 1};
  EXPECT_DOUBLE_EQ(spearman(x, up).rho, 1.0);
  EXPECT_DOUBLE_EQ(spearman(x, down).rho, -1.0);
  EXPECT_EQ(spearman(x, up).p_value, 0.0);
}

TEST(Spearman, SmallPermutation) {
  std::vector<double> x = {1, 2, 3, 4, 5}, y = {1, 3, 2, 5, 4};
  auto r = spearman(x, y);
  EXPECT_EQ(r.rho, 0.8);
  EXPECT_NEAR(r.rho, 1.0 - 6.0 * 4.0 / (5.0 * 24.0), 1e-15);
  EXPECT_NEAR(r.rho, oracle::spearman(x, y), 1e-12);
  // t = rho sqrt(3 / (1 - rho^2)) = 2.3094 on 3 degrees of freedom.
  EXPECT_NEAR(r.p_value, 0.104088, 1e-5);
  auto exact = spearman(x, y, {PValueMethod::ExactPermutation});
  // 16 of the 120 orderings reach |rho| >= 0.8 (sum of squared rank gaps <= 4 or >= 36).
  EXPECT_NEAR(exact.p_value, 16.0 / 120.0, 1e-12);
}

TEST(Spearman, AverageRanks) {
  std::vector<double> v = {10, 20, 20, 5};
  EXPECT_EQ(average_ranks(v), (std::vector<double>{2.0, 3.5, 3.5, 1.0}));
}

TEST(Spearman, Errors) {
  std::vector<double> a = {1, 2, 3}, b = {1, 2}, c = {1, 1, 1}, two = {1, 2};
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  EXPECT_EQ(code([&] { spearman(a, b); }), ErrorCode::LengthMismatch);
  EXPECT_EQ(code([&] { spearman(a, c); }), ErrorCode::DegenerateInput);
  EXPECT_EQ(code([&] { spearman(two, two); }), ErrorCode::DegenerateInput);
  std::vector<double> big(11, 0.0);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = static_cast<double>(i);
  EXPECT_EQ(code([&] { spearman(big, big, {PValueMethod::ExactPermutation}); }), ErrorCode::InvalidArgument);
}

TEST(Spearman, Stars) {
  EXPECT_EQ(significance_stars(0.0005), "***");
  EXPECT_EQ(significance_stars(0.005), "**");
  EXPECT_EQ(significance_stars(0.03), "*");
  EXPECT_EQ(significance_stars(0.05), "");
  EXPECT_EQ(significance_stars(0.5), "");
}

TEST(Spearman, MonteCarloIsSeededAndCloseToExact) {
  std::vector<double> x = {1, 2, 3, 4, 5, 6, 7}, y = {2, 1, 4, 3, 7, 5, 6};
  SpearmanOptions mc{PValueMethod::MonteCarloPermutation, 42, 20000};
  auto a = spearman(x, y, mc);
  auto b = spearman(x, y, mc);
  EXPECT_EQ(a.p_value, b.p_value);
  auto exact = spearman(x, y, {PValueMethod::ExactPermutation});
  EXPECT_NEAR(a.p_value, exact.p_value, 0.01);
}

TEST(SpearmanProperty, MatchesBruteForceWithTies) {
  gen::Rng rng(501);
  auto constant = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&](double e) { return e == v[0]; });
  };
  int rejected = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + gen::uniform_index(rng, 30);
    std::vector<double> x, y;
    for (x = gen::vector_with_ties(rng, n); constant(x); x = gen::vector_with_ties(rng, n)) {
      EXPECT_THROW(spearman(x, gen::vector_with_ties(rng, n)), Error);
      ++rejected;
    }
    do y = gen::vector_with_ties(rng, n);
    while (constant(y));
    EXPECT_NEAR(spearman(x, y).rho, oracle::spearman(x, y), 1e-9);
  }
  EXPECT_GT(rejected, 0);
}

TEST(SpearmanProperty, SymmetricAndMonotoneInvariant) {
  gen::Rng rng(502);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 3 + gen::uniform_index(rng, 20);
    std::vector<double> x(n), y(n), fx(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = gen::uniform(rng, -5, 5);
      y[i] = gen::uniform(rng, -5, 5);
      fx[i] = std::exp(x[i]) + 3.0 * x[i];
    }
    const auto a = spearman(x, y), b = spearman(y, x), c = spearman(fx, y);
    EXPECT_EQ(a.rho, b.rho);
    EXPECT_NEAR(a.p_value, b.p_value, 1e-15);
    EXPECT_NEAR(a.rho, c.rho, 1e-12);
  }
}
