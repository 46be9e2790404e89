#include "langconf/metrics/spearman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <boost/math/distributions/students_t.hpp>

#include "langconf/error.hpp"

namespace langconf::metrics {
namespace {

// Inputs are ranks (multiples of one half), so the raw-sum form stays exact.
double pearson(std::span<const double> a, std::span<const double> b) {
  const double n = static_cast<double>(a.size());
  double sa = 0.0, sb = 0.0, sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    sab += a[i] * b[i];
    saa += a[i] * a[i];
    sbb += b[i] * b[i];
  }
  const double cov = n * sab - sa * sb;
  return std::clamp(cov / std::sqrt((n * saa - sa * sa) * (n * sbb - sb * sb)), -1.0, 1.0);
}

bool constant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

double t_approximation(double rho, std::size_t n) {
  if (std::abs(rho) >= 1.0) return 0.0;
  const double df = static_cast<double>(n - 2);
  const double t = rho * std::sqrt(df / (1.0 - rho * rho));
  const boost::math::students_t dist(df);
  return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t))));
}

// Relative slack so that permutations reproducing |rho| exactly are counted.
constexpr double kPermutationTolerance = 1e-12;

double exact_permutation(const std::vector<double>& rx, std::vector<double> ry, double rho) {
  std::sort(ry.begin(), ry.end());
  std::size_t hits = 0, total = 0;
  do {
    ++total;
    if (std::abs(pearson(rx, ry)) >= std::abs(rho) - kPermutationTolerance) ++hits;
  } while (std::next_permutation(ry.begin(), ry.end()));
  // next_permutation skips duplicate orderings of tied ranks; each distinct
  // ordering stands for the same number of raw permutations, so the ratio holds.
  return static_cast<double>(hits) / static_cast<double>(total);
}

double monte_carlo_permutation(const std::vector<double>& rx, std::vector<double> ry, double rho,
                               const SpearmanOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < options.permutations; ++i) {
    std::shuffle(ry.begin(), ry.end(), rng);
    if (std::abs(pearson(rx, ry)) >= std::abs(rho) - kPermutationTolerance) ++hits;
  }
  return static_cast<double>(hits + 1) / static_cast<double>(options.permutations + 1);
}

}  // namespace

std::string_view to_string(PValueMethod m) noexcept {
  switch (m) {
    case PValueMethod::TApproximation: return "t-approximation";
    case PValueMethod::ExactPermutation: return "exact-permutation";
    case PValueMethod::MonteCarloPermutation: return "monte-carlo-permutation";
  }
  return "";
}

PValueMethod parse_pvalue_method(std::string_view text) {
  if (text == "t" || text == "t-approximation") return PValueMethod::TApproximation;
  if (text == "exact" || text == "exact-permutation") return PValueMethod::ExactPermutation;
  if (text == "montecarlo" || text == "monte-carlo-permutation") return PValueMethod::MonteCarloPermutation;
  throw Error(ErrorCode::InvalidArgument, "unknown p-value method: " + std::string(text));
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys, const SpearmanOptions& options) {
  if (xs.size() != ys.size()) throw Error(ErrorCode::LengthMismatch, "spearman inputs differ in length");
  if (xs.size() < 3) throw Error(ErrorCode::DegenerateInput, "spearman needs at least 3 pairs");
  if (constant(xs) || constant(ys)) throw Error(ErrorCode::DegenerateInput, "spearman input is constant");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) throw Error(ErrorCode::InvalidArgument, "non-finite input");
  }

  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  SpearmanResult result;
  result.n = xs.size();
  result.rho = pearson(rx, ry);
  result.method = options.method;
  switch (options.method) {
    case PValueMethod::TApproximation:
      result.p_value = t_approximation(result.rho, result.n);
      break;
    case PValueMethod::ExactPermutation:
      if (result.n > 10) throw Error(ErrorCode::InvalidArgument, "exact permutation p-values are limited to n <= 10");
      result.p_value = exact_permutation(rx, ry, result.rho);
      break;
    case PValueMethod::MonteCarloPermutation:
      result.p_value = monte_carlo_permutation(rx, ry, result.rho, options);
      break;
  }
  return result;
}

std::string_view significance_stars(double p_value) noexcept {
  if (p_value < 0.001) return "***";
  if (p_value < 0.01) return "**";
  if (p_value < 0.05) return "*";
  return "";
}

}  // namespace langconf::metrics
