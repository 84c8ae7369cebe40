#pragma once

// Complex-matrix interchange formats.
//
// Binary (bit-exact), all little-endian:
//     "QSAR"  u16 version (=1)  u32 N_r  u32 N_a
//     N_r * N_a pairs of f64 (re, im), row-major (row = range bin)
//
// Text:
//     QSAR-CSV v1,<N_r>,<N_a>
//     one line per range bin: re,im,re,im,... (N_a pairs), 17 significant digits
//
// Loaded matrices are tagged time-time; the file carries no domain.

#include "qsar/complex_matrix.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace qsar::io {

enum class MatrixFormat { Binary, Text };

inline constexpr std::uint16_t kBinaryVersion = 1;

/// ".csv" selects text, anything else binary.
MatrixFormat format_for_path(const std::filesystem::path& path);

std::string serialize_matrix(const ComplexMatrix& m, MatrixFormat format);
/// Detects the format from the leading bytes. Throws FormatError (with byte
/// offset) on a bad magic, bad header, malformed number or truncation.
ComplexMatrix parse_matrix(std::string_view bytes);

void store_matrix(const ComplexMatrix& m, const std::filesystem::path& path);
void store_matrix(const ComplexMatrix& m, const std::filesystem::path& path, MatrixFormat format);
ComplexMatrix load_matrix(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace qsar::io
