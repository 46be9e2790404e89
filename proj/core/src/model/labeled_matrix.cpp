#include "langconf/labeled_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "langconf/error.hpp"

namespace langconf {
namespace {

void require_unique(const std::vector<LanguageTag>& labels, const char* axis) {
  std::set<LanguageTag> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::InvalidArgument, std::string("duplicate ") + axis + " label " + l.str());
    }
  }
}

std::optional<std::size_t> find_label(const std::vector<LanguageTag>& labels, const LanguageTag& lang) {
  const auto it = std::find(labels.begin(), labels.end(), lang);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

LabeledMatrix::LabeledMatrix(std::vector<LanguageTag> row_labels, std::vector<LanguageTag> col_labels,
                             std::vector<double> values)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)), values_(std::move(values)) {
  require_unique(row_labels_, "row");
  require_unique(col_labels_, "column");
  if (values_.size() != row_labels_.size() * col_labels_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix values do not match label dimensions");
  }
  if (!std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::InvalidArgument, "matrix values must be finite");
  }
}

LabeledMatrix LabeledMatrix::zeros(std::vector<LanguageTag> row_labels, std::vector<LanguageTag> col_labels) {
  std::vector<double> values(row_labels.size() * col_labels.size(), 0.0);
  return LabeledMatrix(std::move(row_labels), std::move(col_labels), std::move(values));
}

std::optional<std::size_t> LabeledMatrix::row_index(const LanguageTag& lang) const {
  return find_label(row_labels_, lang);
}

std::optional<std::size_t> LabeledMatrix::col_index(const LanguageTag& lang) const {
  return find_label(col_labels_, lang);
}

std::vector<double> LabeledMatrix::column(std::size_t col) const {
  std::vector<double> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = at(r, col);
  return out;
}

double LabeledMatrix::column_sum(std::size_t col) const {
  double sum = 0.0;
  for (std::size_t r = 0; r < rows(); ++r) sum += at(r, col);
  return sum;
}

LabeledMatrix LabeledMatrix::reindexed(const std::vector<LanguageTag>& rows, const std::vector<LanguageTag>& cols) const {
  std::vector<std::size_t> ri, ci;
  for (const auto& l : rows) {
    auto idx = row_index(l);
    if (!idx) throw Error(ErrorCode::InvalidArgument, "unknown row label " + l.str());
    ri.push_back(*idx);
  }
  for (const auto& l : cols) {
    auto idx = col_index(l);
    if (!idx) throw Error(ErrorCode::InvalidArgument, "unknown column label " + l.str());
    ci.push_back(*idx);
  }
  std::vector<double> values;
  values.reserve(ri.size() * ci.size());
  for (auto r : ri)
    for (auto c : ci) values.push_back(at(r, c));
  return LabeledMatrix(rows, cols, std::move(values));
}

LabeledMatrix LabeledMatrix::transposed() const {
  std::vector<double> values;
  values.reserve(values_.size());
  for (std::size_t c = 0; c < cols(); ++c)
    for (std::size_t r = 0; r < rows(); ++r) values.push_back(at(r, c));
  return LabeledMatrix(col_labels_, row_labels_, std::move(values));
}

}  // namespace langconf
