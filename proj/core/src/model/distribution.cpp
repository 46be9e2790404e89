#include "langconf/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "langconf/error.hpp"

namespace langconf {

std::string_view to_string(Granularity g) noexcept {
  return g == Granularity::Line ? "line" : "word";
}

Granularity parse_granularity(std::string_view text) {
  if (text == "line") return Granularity::Line;
  if (text == "word") return Granularity::Word;
  throw Error(ErrorCode::InvalidArgument, "unknown granularity '" + std::string(text) + "'");
}

LanguageDistribution::LanguageDistribution(Granularity granularity, MassMap mass, double unidentified_mass,
                                           std::size_t unit_count)
    : granularity_(granularity), unidentified_mass_(unidentified_mass), unit_count_(unit_count) {
  if (!std::isfinite(unidentified_mass) || unidentified_mass < 0.0 || unidentified_mass > 1.0 + 1e-9) {
    throw Error(ErrorCode::InvalidArgument, "unidentified mass out of [0,1]");
  }
  for (auto& [lang, p] : mass) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0 + 1e-9) {
      throw Error(ErrorCode::InvalidArgument, "mass for " + lang.str() + " out of [0,1]");
    }
    if (p > 0.0) mass_.emplace(lang, p);
  }
}

LanguageDistribution LanguageDistribution::empty(Granularity granularity) {
  return LanguageDistribution(granularity, {}, 1.0, 0);
}

double LanguageDistribution::identified_mass() const noexcept {
  return std::accumulate(mass_.begin(), mass_.end(), 0.0, [](double acc, const auto& kv) { return acc + kv.second; });
}

double LanguageDistribution::probability(const LanguageTag& lang) const noexcept {
  const auto it = mass_.find(lang);
  return it == mass_.end() ? 0.0 : it->second;
}

LanguageDistribution normalize_distribution(const LanguageDistribution& d) {
  const double total = d.identified_mass();
  if (total <= 0.0) {
    throw Error(ErrorCode::AllUnidentified, "no identified units to normalize");
  }
  // An already normalized distribution keeps its unidentified fraction as metadata only.
  const bool normalized = std::abs(total - 1.0) <= 1e-9;
  if (!normalized && total + d.unidentified_mass() > 1.0 + 1e-9) {
    throw Error(ErrorCode::InvalidArgument, "identified plus unidentified mass exceeds 1");
  }
  LanguageDistribution::MassMap scaled;
  for (const auto& [lang, p] : d.mass()) scaled.emplace(lang, p / total);
  return LanguageDistribution(d.granularity(), std::move(scaled), d.unidentified_mass(), d.unit_count());
}

LanguageDistribution merge_distributions(std::span<const LanguageDistribution> ds, std::span<const double> weights) {
  if (ds.empty()) throw Error(ErrorCode::EmptyInput, "no distributions to merge");
  if (ds.size() != weights.size()) throw Error(ErrorCode::LengthMismatch, "one weight per distribution required");
  double weight_sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw Error(ErrorCode::InvalidArgument, "weights must be non-negative");
    weight_sum += w;
  }
  if (weight_sum <= 0.0) throw Error(ErrorCode::EmptyInput, "weights sum to zero");

  const Granularity granularity = ds.front().granularity();
  LanguageDistribution::MassMap mass;
  double unidentified = 0.0;
  std::size_t units = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i].granularity() != granularity) {
      throw Error(ErrorCode::MixedGranularity, "cannot merge line and word distributions");
    }
    const double w = weights[i] / weight_sum;
    for (const auto& [lang, p] : ds[i].mass()) mass[lang] += w * p;
    unidentified += w * ds[i].unidentified_mass();
    units += ds[i].unit_count();
  }
  return LanguageDistribution(granularity, std::move(mass), std::min(unidentified, 1.0), units);
}

}  // namespace langconf
