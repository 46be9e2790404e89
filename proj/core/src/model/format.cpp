#include "langconf/format.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "langconf/error.hpp"

namespace langconf {

std::string format_number(double value, int significant) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, significant);
  if (ec != std::errc{}) throw Error(ErrorCode::InvalidArgument, "cannot format number");
  return std::string(buf, ptr);
}

std::string csv_escape(std::string_view cell) {
  if (cell.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else if (c != '\r') {
      cells.back() += c;
    }
  }
  return cells;
}

std::string matrix_to_csv(const LabeledMatrix& m, int significant) {
  std::string out = "lang";
  for (const auto& c : m.col_labels()) out += "," + c.str();
  out += "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += m.row_labels()[i].str();
    for (std::size_t j = 0; j < m.cols(); ++j) out += "," + format_number(m.at(i, j), significant);
    out += "\n";
  }
  return out;
}

LabeledMatrix matrix_from_csv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorCode::ParseError, "matrix csv line " + std::to_string(line_no) + ": " + what);
  };
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "empty matrix csv");
  ++line_no;
  auto header = split_csv_line(line);
  std::vector<LanguageTag> cols;
  for (std::size_t j = 1; j < header.size(); ++j) {
    auto tag = LanguageTag::try_parse(header[j]);
    if (!tag) throw fail("bad column label '" + header[j] + "'");
    cols.push_back(*tag);
  }
  std::vector<LanguageTag> rows;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv_line(line);
    if (cells.size() != cols.size() + 1) throw fail("expected " + std::to_string(cols.size() + 1) + " cells");
    auto tag = LanguageTag::try_parse(cells[0]);
    if (!tag) throw fail("bad row label '" + cells[0] + "'");
    rows.push_back(*tag);
    for (std::size_t j = 1; j < cells.size(); ++j) {
      double v = 0.0;
      const auto& cell = cells[j];
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size()) throw fail("not a number: '" + cell + "'");
      values.push_back(v);
    }
  }
  return LabeledMatrix(std::move(rows), std::move(cols), std::move(values));
}

}  // namespace langconf
