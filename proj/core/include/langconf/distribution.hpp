#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string_view>

#include "langconf/language_tag.hpp"

namespace langconf {

enum class Granularity { Line, Word };

std::string_view to_string(Granularity g) noexcept;
Granularity parse_granularity(std::string_view text);

/// Probability mass over detected languages plus the mass of units nobody
/// could identify. Zero-mass entries are dropped on construction, so the
/// support of the distribution is exactly `mass()`'s key set.
class LanguageDistribution {
 public:
  using MassMap = std::map<LanguageTag, double>;

  /// Throws InvalidArgument on negative, non-finite or >1 masses.
  LanguageDistribution(Granularity granularity, MassMap mass, double unidentified_mass, std::size_t unit_count);

  /// A distribution over zero observed units: no support, all mass unidentified.
  static LanguageDistribution empty(Granularity granularity);

  Granularity granularity() const noexcept { return granularity_; }
  const MassMap& mass() const noexcept { return mass_; }
  double unidentified_mass() const noexcept { return unidentified_mass_; }
  std::size_t unit_count() const noexcept { return unit_count_; }

  double identified_mass() const noexcept;
  double probability(const LanguageTag& lang) const noexcept;

 private:
  Granularity granularity_;
  MassMap mass_;
  double unidentified_mass_;
  std::size_t unit_count_;
};

/// Rescales identified mass to sum to one. The unidentified fraction is kept
/// as metadata. Throws AllUnidentified when nothing was identified.
LanguageDistribution normalize_distribution(const LanguageDistribution& d);

/// Convex combination under the normalized weights; unit counts add up.
/// Throws EmptyInput, LengthMismatch, MixedGranularity or InvalidArgument.
LanguageDistribution merge_distributions(std::span<const LanguageDistribution> ds, std::span<const double> weights);

}  // namespace langconf
