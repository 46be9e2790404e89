#include "langconf/metrics/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "langconf/error.hpp"

namespace langconf::metrics {

std::string_view to_string(KeyField f) noexcept {
  switch (f) {
    case KeyField::Model: return "model";
    case KeyField::Dataset: return "dataset";
    case KeyField::Setting: return "setting";
    case KeyField::TargetLang: return "target_lang";
    case KeyField::EvalStep: return "eval_step";
    case KeyField::Granularity: return "granularity";
  }
  return "";
}

KeyField parse_key_field(std::string_view text) {
  for (auto f : {KeyField::Model, KeyField::Dataset, KeyField::Setting, KeyField::TargetLang, KeyField::EvalStep,
                 KeyField::Granularity}) {
    if (to_string(f) == text) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown aggregation key '" + std::string(text) + "'");
}

AggregateKey::AggregateKey(std::vector<KeyField> fields) {
  for (auto f : fields) {
    if (std::find(fields_.begin(), fields_.end(), f) == fields_.end()) fields_.push_back(f);
  }
  if (fields_.empty()) throw Error(ErrorCode::InvalidArgument, "aggregation key needs at least one field");
}

AggregateKey AggregateKey::parse(std::string_view comma_separated) {
  std::vector<KeyField> fields;
  std::size_t start = 0;
  while (start <= comma_separated.size()) {
    auto end = comma_separated.find(',', start);
    if (end == std::string_view::npos) end = comma_separated.size();
    auto part = comma_separated.substr(start, end - start);
    if (!part.empty()) fields.push_back(parse_key_field(part));
    start = end + 1;
  }
  return AggregateKey(std::move(fields));
}

std::vector<std::string> AggregateKey::values_for(const EntropyObservation& obs) const {
  const GenerationRecord& r = *obs.record;
  std::vector<std::string> out;
  out.reserve(fields_.size());
  for (auto f : fields_) {
    switch (f) {
      case KeyField::Model: out.push_back(r.model); break;
      case KeyField::Dataset: out.push_back(r.dataset); break;
      case KeyField::Setting: out.emplace_back(to_string(r.setting)); break;
      case KeyField::TargetLang: out.push_back(r.target_lang.str()); break;
      case KeyField::EvalStep: out.push_back(r.eval_step.value_or("")); break;
      case KeyField::Granularity: out.emplace_back(to_string(obs.granularity)); break;
    }
  }
  return out;
}

std::vector<AggregateRow> aggregate_entropy(std::span<const EntropyObservation> observations, const AggregateKey& key) {
  if (observations.empty()) throw Error(ErrorCode::EmptyInput, "no entropy observations to aggregate");
  std::map<std::vector<std::string>, std::vector<double>> groups;
  for (const auto& obs : observations) groups[key.values_for(obs)].push_back(obs.entropy.value);

  std::vector<AggregateRow> rows;
  for (auto& [values, xs] : groups) {
    AggregateRow row{values, 0.0, xs.size(), 0.0};
    for (double x : xs) row.mean += x;
    row.mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - row.mean) * (x - row.mean);
    row.stddev = std::sqrt(ss / static_cast<double>(xs.size()));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace langconf::metrics
