#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace langconf {

/// Throws FileNotFound / IoError.
std::string read_text_file(const std::filesystem::path& path);

/// Writes to a sibling temp file and renames it over `path`, so readers never
/// observe a partially written artifact.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace langconf
