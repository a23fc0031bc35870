#pragma once

#include "stabinfer/types.hpp"

#include <filesystem>
#include <iosfwd>

namespace stabinfer {

/// Matrix text format shared toolkit-wide: first line "rows cols", then
/// `rows` lines of whitespace-separated decimal scalars at full precision
/// (17 significant digits), so write/read round-trips bit-exactly.
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix(const std::filesystem::path& path, const Matrix& m);
Matrix read_matrix(std::istream& in);
Matrix read_matrix(const std::filesystem::path& path);

/// Complex eigenvalue lists serialize as "re im" pairs, one per line.
void write_complex_list(const std::filesystem::path& path,
                        const ComplexVector& values);
ComplexVector read_complex_list(const std::filesystem::path& path);

/// Formats one scalar with 17 significant digits.
std::string format_scalar(double value);

}  // namespace stabinfer
