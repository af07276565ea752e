#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace pqaka::persistence {

/// Reads a line-delimited file, skipping blank lines. A missing file
/// yields an empty list.
std::vector<std::string> read_lines(const std::filesystem::path& path);

/// Writes `lines` to a temporary sibling and renames it over `path`.
void write_lines_atomic(const std::filesystem::path& path, const std::vector<std::string>& lines);

}  // namespace pqaka::persistence
