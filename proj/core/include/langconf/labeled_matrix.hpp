#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "langconf/language_tag.hpp"

namespace langconf {

/// Dense row-major matrix whose rows and columns are labelled by language.
/// Labels are unique per axis and every value is finite.
class LabeledMatrix {
 public:
  LabeledMatrix(std::vector<LanguageTag> row_labels, std::vector<LanguageTag> col_labels, std::vector<double> values);

  static LabeledMatrix zeros(std::vector<LanguageTag> row_labels, std::vector<LanguageTag> col_labels);

  std::size_t rows() const noexcept { return row_labels_.size(); }
  std::size_t cols() const noexcept { return col_labels_.size(); }
  const std::vector<LanguageTag>& row_labels() const noexcept { return row_labels_; }
  const std::vector<LanguageTag>& col_labels() const noexcept { return col_labels_; }
  std::span<const double> values() const noexcept { return values_; }

  double at(std::size_t row, std::size_t col) const { return values_[row * cols() + col]; }

  std::optional<std::size_t> row_index(const LanguageTag& lang) const;
  std::optional<std::size_t> col_index(const LanguageTag& lang) const;

  std::vector<double> column(std::size_t col) const;
  double column_sum(std::size_t col) const;

  /// Copy restricted to (and ordered by) the given labels, which must all exist.
  LabeledMatrix reindexed(const std::vector<LanguageTag>& rows, const std::vector<LanguageTag>& cols) const;

  LabeledMatrix transposed() const;

 private:
  std::vector<LanguageTag> row_labels_;
  std::vector<LanguageTag> col_labels_;
  std::vector<double> values_;
};

}  // namespace langconf
