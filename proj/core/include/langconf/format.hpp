#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "langconf/labeled_matrix.hpp"

namespace langconf {

/// Shortest "%g"-style rendering with `significant` digits ("0.693147", "1e-10").
std::string format_number(double value, int significant = 6);

/// Quotes a CSV cell when it contains a comma, quote or newline.
std::string csv_escape(std::string_view cell);

/// Splits one CSV line, honouring double-quoted cells.
std::vector<std::string> split_csv_line(std::string_view line);

/// Header row `lang,<col codes...>`, then one row per row label.
std::string matrix_to_csv(const LabeledMatrix& m, int significant = 6);

/// Inverse of matrix_to_csv. Throws ParseError.
LabeledMatrix matrix_from_csv(std::string_view csv);

}  // namespace langconf
