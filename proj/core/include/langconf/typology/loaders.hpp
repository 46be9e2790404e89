#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "langconf/typology/graph.hpp"

namespace langconf::typology {

/// Source id (e.g. a Glottocode) -> ISO 639-3 tag.
using CodeMapping = std::map<std::string, LanguageTag, std::less<>>;

/// Two-column TSV `source_id \t iso639_3`. Throws ParseError.
CodeMapping load_code_mapping(const std::filesystem::path& path);

// Both loaders read TSV files; blank lines and `#` comments are ignored, and a
// first row whose first cell is a header word (lang_id, language, ...) is
// skipped. Language ids go through `mapping` when given, otherwise through the
// ISO code normalizer; ids that resolve to nothing are dropped with a warning
// recorded on the graph.

/// Long format `lang_id \t feature_id \t value`. Empty, `?` and `NA` values are
/// missing. Binary tables accept only 0/1 and keep the 1s.
/// Throws ParseError (with line number) or DuplicateFeature on conflicting rows.
LanguageGraph load_feature_table(const std::filesystem::path& path, GraphKind kind,
                                 const CodeMapping* mapping = nullptr);

/// Wide format `lang_id \t v1 \t v2 ...`.
/// Throws ParseError, DimensionMismatch or ZeroVector.
LanguageGraph load_embedding_table(const std::filesystem::path& path, const CodeMapping* mapping = nullptr);

}  // namespace langconf::typology
