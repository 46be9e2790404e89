#pragma once

#include <span>

#include "langconf/labeled_matrix.hpp"
#include "langconf/metrics/entropy.hpp"

namespace langconf::metrics {

/// Language-to-language confusion matrix.
///
/// Columns are the target languages present, rows the union of languages with
/// an entropy contribution. Cell (i, j) is the mean contribution of language i
/// over records targeting j (0 when i never shows up for j), so each column sums
/// to the mean entropy of its target. Throws EmptyInput.
LabeledMatrix build_confusion_matrix(std::span<const EntropyObservation> observations);

}  // namespace langconf::metrics
