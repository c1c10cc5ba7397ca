#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "stablegft/sparse_shift.hpp"
#include "stablegft/types.hpp"

namespace stablegft::io {

/// Loads a Matrix Market coordinate file ("%%MatrixMarket matrix coordinate
/// <field> <symmetry>"). Supported fields: real, integer, complex; supported
/// symmetries: general, symmetric (off-diagonal entries copied to the other
/// triangle), and hermitian (copied conjugated, complex field only).
/// Indices are 1-based in the file and converted exactly. Throws ParseError
/// with the offending 1-based line number on malformed content, non-square
/// sizes, out-of-range indices, zero weights, duplicate coordinates
/// (including duplicates created by expansion), and entry-count mismatches.
SparseShift load_matrix_market(const std::filesystem::path& path);

/// Writes coordinate Matrix Market with 17 significant digits, so a
/// save/load round trip is exact. Emits field "real" when every weight is
/// real, "complex" otherwise; symmetry is always "general".
void save_matrix_market(const SparseShift& shift, const std::filesystem::path& path);

/// Loads a directed edge list: one "src dst" or "src dst w" per line with
/// 0-based indices, default weight 1. '#' starts a comment; blank lines are
/// skipped. With weighted = false a third token is a parse error. The node
/// count is one past the largest index seen. Duplicate edges are rejected.
SparseShift load_edge_list(const std::filesystem::path& path, bool weighted = true);

/// Writes "src dst w" lines with 17 significant digits (exact round trip).
/// Throws InvalidArgumentError when a weight has a nonzero imaginary part
/// (the grammar has no complex form).
void save_edge_list(const SparseShift& shift, const std::filesystem::path& path);

/// Parameters of one directed Erdos-Renyi draw.
struct RandomGraphSpec {
    Index n = 1;
    double p = 0.0;
    bool self_loops = false;
    std::uint64_t seed = 0;
};

/// Samples a directed graph: every ordered pair (i, j), i != j, becomes a
/// weight-1 edge independently with probability p, and with self_loops each
/// (i, i) as well. Draws come from SplitMix64(seed), one draw per candidate
/// pair in row-major order (the diagonal is skipped without consuming a draw
/// when self_loops is off), so identical specs reproduce bit-identical
/// graphs on every platform.
SparseShift erdos_renyi(const RandomGraphSpec& spec);

/// Expected shape of a user-supplied dataset. The data files themselves are
/// not distributed; descriptors let a run verify it loaded the right file.
struct DatasetDescriptor {
    std::string name;
    Index expected_n = 0;
    Index expected_nnz = 0;
    std::optional<std::string> sha256;  ///< lowercase hex; checked when present
    std::string notes;
};

/// Reads a descriptor from JSON ({"name", "expected_n", "expected_nnz",
/// "sha256" (string or null), "notes"}). Throws ParseError on malformed JSON
/// or missing fields.
DatasetDescriptor load_descriptor(const std::filesystem::path& path);

enum class GraphFormat { matrix_market, edge_list };

/// Loads a dataset and cross-checks it against its descriptor: file checksum
/// first (when the descriptor carries one), then node and entry counts.
/// Mismatches throw InvalidArgumentError naming expected and actual values.
SparseShift load_dataset(const DatasetDescriptor& descriptor, const std::filesystem::path& path,
                         GraphFormat format);

/// SHA-256 of a file's bytes as lowercase hex.
std::string sha256_hex(const std::filesystem::path& path);

}  // namespace stablegft::io
