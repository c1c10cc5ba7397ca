#pragma once

#include <filesystem>
#include <string>

#include "stablegft/types.hpp"

namespace stablegft::io {

/// Writes a dense complex matrix to a binary file.
///
/// Layout: 16-byte header (magic "SGFT", u32 dtype, u32 rows, u32 cols,
/// all little-endian) followed by rows*cols complex<double> values in
/// column-major order. dtype 1 is complex128, the only type written today;
/// the field exists so future readers can reject layouts they do not know.
void save_matrix(const ComplexMatrix& matrix, const std::filesystem::path& path);

/// Reads a matrix written by save_matrix. Throws ParseError when the magic,
/// dtype, or payload size does not match the header.
ComplexMatrix load_matrix(const std::filesystem::path& path);

/// Writes a matrix as CSV rows "i,j,re,im" (0-based indices, all entries
/// including zeros). The first line is a schema comment so downstream
/// tooling can detect format drift:
///
///   # schema: stablegft.<name>.v1
void save_matrix_csv(const ComplexMatrix& matrix, const std::filesystem::path& path,
                     const std::string& name);

/// Writes a complex vector as CSV rows "index,real,imag" with the same
/// schema comment convention as save_matrix_csv.
void save_signal_csv(const ComplexVector& signal, const std::filesystem::path& path,
                     const std::string& name);

/// Reads a vector written by save_signal_csv. Comment lines are skipped;
/// rows must be dense in index order starting at 0.
ComplexVector load_signal_csv(const std::filesystem::path& path);

}  // namespace stablegft::io
