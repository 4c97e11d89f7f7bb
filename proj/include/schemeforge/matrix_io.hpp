#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "schemeforge/matrix.hpp"

namespace schemeforge {

/// Matrix text format:
///
///     # comment lines start with '#'
///     3
///     1/2 1/4 0.25
///     ...
///
/// The first data line holds the order n >= 1, followed by exactly n rows of n
/// whitespace-separated tokens. A token is an integer, p/q, or a decimal;
/// every token is read exactly. Blank lines are ignored. Errors carry the
/// 1-based line and column.
Matrix parse_matrix(std::string_view text);

/// Reads and parses a file. I/O failures are ParseErrors with line 0.
Matrix load_matrix(const std::filesystem::path& path);

/// Inverse of parse_matrix: order line, then one row per line in p/q form.
std::string serialize_matrix(const Matrix& m);

}  // namespace schemeforge
