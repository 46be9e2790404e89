#include "langconf/metrics/confusion_matrix.hpp"

#include <map>
#include <set>

#include "langconf/error.hpp"

namespace langconf::metrics {

LabeledMatrix build_confusion_matrix(std::span<const EntropyObservation> observations) {
  if (observations.empty()) throw Error(ErrorCode::EmptyInput, "no observations for confusion matrix");

  std::map<LanguageTag, std::size_t> records_per_target;
  std::map<LanguageTag, std::map<LanguageTag, double>> sums;  // target -> lang -> summed contribution
  std::set<LanguageTag> row_set;
  for (const auto& obs : observations) {
    const LanguageTag& target = obs.record->target_lang;
    ++records_per_target[target];
    auto& column = sums[target];
    for (const auto& [lang, term] : obs.entropy.contributions) {
      column[lang] += term;
      row_set.insert(lang);
    }
  }

  std::vector<LanguageTag> rows(row_set.begin(), row_set.end());
  std::vector<LanguageTag> cols;
  for (const auto& [target, n] : records_per_target) cols.push_back(target);

  std::vector<double> values(rows.size() * cols.size(), 0.0);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const double n = static_cast<double>(records_per_target[cols[j]]);
    const auto& column = sums[cols[j]];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (const auto it = column.find(rows[i]); it != column.end()) values[i * cols.size() + j] = it->second / n;
    }
  }
  return LabeledMatrix(std::move(rows), std::move(cols), std::move(values));
}

}  // namespace langconf::metrics
