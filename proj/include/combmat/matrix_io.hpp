#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "combmat/matrix.hpp"

namespace combmat {

// Text format:
//
//   n m
//   a11 a12 ... a1m
//   ...
//   an1 an2 ... anm
//
// Entries are "p" or "p/q". Blank lines and lines starting with '#' are
// ignored. JSON format: {"rows": n, "cols": m, "entries": [["p/q", ...], ...]}.

/// Parses either format; JSON is recognized by a leading '{'. Throws
/// ParseError carrying the 1-based line number of the offending line.
Matrix parse_matrix(std::string_view text);
Matrix parse_matrix_text(std::string_view text);
Matrix parse_matrix_json(const nlohmann::json& j);

std::string render_matrix_text(const Matrix& m);
nlohmann::ordered_json matrix_to_json(const Matrix& m);

/// Compact form with the common denominator pulled out, e.g.
/// "1/9·[[4,4,1],[1,4,4],[4,1,4]]". Integer matrices render without prefix.
std::string render_matrix_compact(const Matrix& m);

/// Reads a whole file ("-" for stdin). Throws Error when unreadable.
std::string read_text_file(const std::string& path);

}  // namespace combmat
