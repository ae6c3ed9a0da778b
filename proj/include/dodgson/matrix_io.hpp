#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dodgson/matrix.hpp"

namespace dodgson {

/// Parses the plain-text matrix format.
///
/// One row per line, entries separated by whitespace. Lines whose first
/// non-blank character is '#' are comments; blank lines are skipped. An
/// optional leading line "n m" gives the dimensions. Because a header is
/// itself two integers, a first line of two positive integers is read as a
/// header only when exactly n rows of m tokens follow; if both readings are
/// consistent, the one producing a square matrix wins, and a header wins
/// when neither does.
///
/// The ring is inferred from the tokens: any '/' makes the matrix rational
/// (integer tokens are promoted), any '.' or exponent makes it real (with
/// `tolerance` as zero threshold; integer tokens are converted), otherwise
/// integer. Mixing rationals and reals is rejected.
///
/// Throws ParseError naming the line and token at fault.
Matrix parse_matrix(std::string_view text, double tolerance = kDefaultTolerance);

/// Reads and parses a matrix file; an unreadable file is a ParseError.
Matrix read_matrix_file(const std::filesystem::path& path, double tolerance = kDefaultTolerance);

/// Builds a matrix from rows of scalar tokens with the same ring inference
/// and promotion rules as parse_matrix. Line numbers in errors are row
/// numbers (1-based).
Matrix matrix_from_tokens(const std::vector<std::vector<std::string>>& rows, double tolerance = kDefaultTolerance);

/// Writes the matrix in the text format, one row per line, each line
/// newline-terminated. With `header`, a leading "n m" line is emitted for
/// multi-row matrices, which makes the output unambiguous to re-parse (a
/// single line never is).
std::string format_matrix(const Matrix& a, bool header = true);

}  // namespace dodgson
