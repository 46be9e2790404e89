#include "langconf/typology/loaders.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "langconf/error.hpp"
#include "langconf/file_io.hpp"
#include "langconf/language_codes.hpp"

namespace langconf::typology {
namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    cells.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  for (auto& c : cells) {
    while (!c.empty() && (c.back() == ' ' || c.back() == '\r')) c.pop_back();
    while (!c.empty() && c.front() == ' ') c.erase(c.begin());
  }
  return cells;
}

bool is_header_word(std::string_view cell) {
  static const std::set<std::string_view> words = {"lang",      "lang_id",    "language", "language_id",
                                                   "iso639_3",  "glottocode", "id",       "source_id"};
  return words.contains(cell);
}

bool is_missing(std::string_view v) { return v.empty() || v == "?" || v == "NA"; }

struct Row {
  std::size_t line_no;
  std::vector<std::string> cells;
};

std::vector<Row> read_rows(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto cells = split_tabs(line);
    if (first) {
      first = false;
      if (is_header_word(cells.front())) continue;
    }
    rows.push_back({line_no, std::move(cells)});
  }
  return rows;
}

// Resolves a table's language id; records a warning (once per id) when it cannot.
class IdResolver {
 public:
  IdResolver(const CodeMapping* mapping, std::string source) : mapping_(mapping), source_(std::move(source)) {}

  std::optional<LanguageTag> resolve(const std::string& id) {
    std::optional<LanguageTag> tag;
    if (mapping_) {
      if (const auto it = mapping_->find(id); it != mapping_->end()) tag = it->second;
    } else {
      tag = normalize_language_code(id);
    }
    if (!tag && unresolved_.insert(id).second) {
      warnings_.push_back(source_ + ": dropping unmapped language id '" + id + "'");
    }
    return tag;
  }

  std::vector<std::string> take_warnings() { return std::move(warnings_); }

 private:
  const CodeMapping* mapping_;
  std::string source_;
  std::set<std::string> unresolved_;
  std::vector<std::string> warnings_;
};

[[noreturn]] void parse_error(const std::filesystem::path& path, std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, path.string() + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

CodeMapping load_code_mapping(const std::filesystem::path& path) {
  CodeMapping mapping;
  for (const auto& row : read_rows(path)) {
    if (row.cells.size() != 2) parse_error(path, row.line_no, "expected 2 columns");
    auto tag = normalize_language_code(row.cells[1]);
    if (!tag) parse_error(path, row.line_no, "invalid ISO 639-3 code '" + row.cells[1] + "'");
    mapping.insert_or_assign(row.cells[0], *tag);
  }
  return mapping;
}

LanguageGraph load_feature_table(const std::filesystem::path& path, GraphKind kind, const CodeMapping* mapping) {
  if (kind == GraphKind::Embedding) throw Error(ErrorCode::KindMismatch, "use load_embedding_table for embeddings");
  IdResolver resolver(mapping, path.filename().string());
  std::map<LanguageTag, std::map<std::string, std::string>> features;
  std::map<LanguageTag, std::set<std::string>> binary;

  for (const auto& row : read_rows(path)) {
    if (row.cells.size() != 3) parse_error(path, row.line_no, "expected 3 tab-separated columns");
    const auto& [id, feature, value] = std::tie(row.cells[0], row.cells[1], row.cells[2]);
    if (feature.empty()) parse_error(path, row.line_no, "empty feature id");
    const auto lang = resolver.resolve(id);
    if (!lang) continue;
    if (kind == GraphKind::Binary) {
      if (is_missing(value)) continue;
      if (value != "0" && value != "1") parse_error(path, row.line_no, "binary value must be 0 or 1, got '" + value + "'");
      auto& set = binary[*lang];
      if (value == "1") set.insert(feature);
      // A 1 and a 0 for the same feature conflict.
      auto& seen = features[*lang];
      if (auto [it, inserted] = seen.emplace(feature, value); !inserted && it->second != value) {
        throw Error(ErrorCode::DuplicateFeature, path.string() + ":" + std::to_string(row.line_no) + ": " +
                                                     lang->str() + " " + feature);
      }
      continue;
    }
    if (is_missing(value)) continue;
    auto& lang_features = features[*lang];
    if (auto [it, inserted] = lang_features.emplace(feature, value); !inserted && it->second != value) {
      throw Error(ErrorCode::DuplicateFeature,
                  path.string() + ":" + std::to_string(row.line_no) + ": " + lang->str() + " " + feature);
    }
  }

  LanguageGraph::Entries entries;
  if (kind == GraphKind::Binary) {
    for (auto& [lang, set] : binary) entries.emplace(lang, BinaryFeatureSet{lang, std::move(set)});
  } else {
    for (auto& [lang, fs] : features) entries.emplace(lang, FeatureVector{lang, std::move(fs)});
  }
  return LanguageGraph(path.stem().string(), kind, std::move(entries), Kernel::Jaccard, KernelTransform::None,
                       resolver.take_warnings());
}

LanguageGraph load_embedding_table(const std::filesystem::path& path, const CodeMapping* mapping) {
  IdResolver resolver(mapping, path.filename().string());
  LanguageGraph::Entries entries;
  std::optional<std::size_t> dim;
  for (const auto& row : read_rows(path)) {
    if (row.cells.size() < 2) parse_error(path, row.line_no, "expected a language id and at least one value");
    std::vector<double> vec;
    vec.reserve(row.cells.size() - 1);
    for (std::size_t i = 1; i < row.cells.size(); ++i) {
      const std::string& cell = row.cells[i];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
        parse_error(path, row.line_no, "not a finite number: '" + cell + "'");
      }
      vec.push_back(v);
    }
    if (!dim) dim = vec.size();
    if (vec.size() != *dim) {
      throw Error(ErrorCode::DimensionMismatch, path.string() + ":" + std::to_string(row.line_no) + ": expected " +
                                                    std::to_string(*dim) + " values, got " + std::to_string(vec.size()));
    }
    if (std::all_of(vec.begin(), vec.end(), [](double v) { return v == 0.0; })) {
      throw Error(ErrorCode::ZeroVector, path.string() + ":" + std::to_string(row.line_no) + ": all-zero embedding");
    }
    const auto lang = resolver.resolve(row.cells[0]);
    if (!lang) continue;
    if (!entries.emplace(*lang, Embedding{*lang, std::move(vec)}).second) {
      parse_error(path, row.line_no, "duplicate embedding for " + lang->str());
    }
  }
  return LanguageGraph(path.stem().string(), GraphKind::Embedding, std::move(entries), Kernel::Cosine,
                       KernelTransform::None, resolver.take_warnings());
}

}  // namespace langconf::typology
