#pragma once

#include <iosfwd>
#include <string>

#include "dsm/matrix.hpp"

namespace dsm {

enum class MatrixFormat { json, csv };

MatrixFormat matrix_format_from_string(const std::string& name);

/// JSON form: {"n": rows, "m": cols, "entries": [[...], ...]} where each entry
/// is an integer or a lowest-terms "p/q" string. CSV form: one line per row of
/// integer-or-"p/q" cells, dimensions inferred. Both render canonically, so
/// write/read round-trips are exact byte-for-byte.
std::string to_json_text(const UMatrix& M);
std::string to_csv_text(const UMatrix& M);

UMatrix from_json_text(const std::string& text);
UMatrix from_csv_text(const std::string& text);

void write_matrix_file(const std::string& path, const UMatrix& M, MatrixFormat format);

/// Sniffs the format: JSON when the first non-space byte is '{', CSV otherwise.
UMatrix read_matrix_file(const std::string& path);

}  // namespace dsm
