#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace langconf::metrics {

enum class PValueMethod { TApproximation, ExactPermutation, MonteCarloPermutation };

std::string_view to_string(PValueMethod m) noexcept;
/// Accepts the to_string forms plus the short names t, exact and montecarlo.
PValueMethod parse_pvalue_method(std::string_view text);

struct SpearmanOptions {
  PValueMethod method = PValueMethod::TApproximation;
  std::uint64_t seed = 0;              // Monte Carlo only
  std::size_t permutations = 20000;    // Monte Carlo only
};

struct SpearmanResult {
  double rho = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
  PValueMethod method = PValueMethod::TApproximation;
};

/// 1-based ranks with ties sharing their average rank.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman's rho as the Pearson correlation of average ranks, with a two-sided
/// p-value. ExactPermutation enumerates all n! orderings and is limited to n <= 10.
/// Throws LengthMismatch, or DegenerateInput for n < 3 or a constant input.
SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys, const SpearmanOptions& options = {});

/// "***" below 0.001, "**" below 0.01, "*" below 0.05, otherwise "".
std::string_view significance_stars(double p_value) noexcept;

}  // namespace langconf::metrics
