#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "langconf/metrics/entropy.hpp"

namespace langconf::metrics {

enum class KeyField { Model, Dataset, Setting, TargetLang, EvalStep, Granularity };

std::string_view to_string(KeyField f) noexcept;
KeyField parse_key_field(std::string_view text);

/// Grouping dimensions. Fields are kept in the order given, duplicates dropped.
class AggregateKey {
 public:
  explicit AggregateKey(std::vector<KeyField> fields);
  static AggregateKey parse(std::string_view comma_separated);

  const std::vector<KeyField>& fields() const noexcept { return fields_; }
  std::vector<std::string> values_for(const EntropyObservation& obs) const;

 private:
  std::vector<KeyField> fields_;
};

struct AggregateRow {
  std::vector<std::string> key_values;
  double mean = 0.0;
  std::size_t count = 0;
  double stddev = 0.0;  // population standard deviation
};

/// Mean entropy per group, rows sorted by key values. Throws EmptyInput.
std::vector<AggregateRow> aggregate_entropy(std::span<const EntropyObservation> observations, const AggregateKey& key);

}  // namespace langconf::metrics
