#include "stablegft/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "stablegft/errors.hpp"
#include "stablegft/rng.hpp"

namespace stablegft::io {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::ifstream open_text(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'", 0);
    }
    return in;
}

/// Coordinate key for duplicate detection; n fits in 32 bits for every
/// supported graph, so the pair packs into one 64-bit word.
std::uint64_t coordinate_key(Index row, Index col, Index n) {
    return static_cast<std::uint64_t>(row) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(col);
}

struct EntrySink {
    Index n;
    std::vector<ShiftEntry> entries;
    std::unordered_set<std::uint64_t> seen;

    void add(Index row, Index col, Complex weight, std::int64_t line,
             const std::string& origin) {
        if (row < 0 || row >= n || col < 0 || col >= n) {
            throw ParseError(origin + ": index (" + std::to_string(row + 1) + ", " +
                                 std::to_string(col + 1) + ") outside 1.." + std::to_string(n),
                             line);
        }
        if (weight == Complex(0.0, 0.0)) {
            throw ParseError(origin + ": explicit zero weight", line);
        }
        if (!std::isfinite(weight.real()) || !std::isfinite(weight.imag())) {
            throw ParseError(origin + ": non-finite weight", line);
        }
        if (!seen.insert(coordinate_key(row, col, n)).second) {
            throw ParseError(origin + ": duplicate coordinate (" + std::to_string(row) + ", " +
                                 std::to_string(col) + ") 0-based",
                             line);
        }
        entries.push_back({row, col, weight});
    }
};

/// Writes a double with enough digits that reading it back is exact.
std::string exact(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

}  // namespace

SparseShift load_matrix_market(const std::filesystem::path& path) {
    std::ifstream in = open_text(path);
    const std::string origin = path.filename().string();

    std::string line;
    std::int64_t line_number = 0;
    if (!std::getline(in, line)) {
        throw ParseError(origin + ": empty file", 1);
    }
    line_number = 1;

    std::istringstream banner(line);
    std::string magic, object, format, field, symmetry;
    banner >> magic >> object >> format >> field >> symmetry;
    if (magic != "%%MatrixMarket") {
        throw ParseError(origin + ": missing %%MatrixMarket banner", line_number);
    }
    object = lower(object);
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);
    if (object != "matrix" || format != "coordinate") {
        throw ParseError(origin + ": only 'matrix coordinate' files are supported", line_number);
    }
    const bool complex_field = field == "complex";
    if (!complex_field && field != "real" && field != "integer") {
        throw ParseError(origin + ": unsupported field '" + field + "'", line_number);
    }
    const bool symmetric = symmetry == "symmetric";
    const bool hermitian = symmetry == "hermitian";
    if (!symmetric && !hermitian && symmetry != "general") {
        throw ParseError(origin + ": unsupported symmetry '" + symmetry + "'", line_number);
    }
    if (hermitian && !complex_field) {
        throw ParseError(origin + ": hermitian symmetry requires the complex field",
                         line_number);
    }

    // Skip comments, then read the size line.
    Index rows = 0, cols = 0;
    std::int64_t declared_nnz = 0;
    for (;;) {
        if (!std::getline(in, line)) {
            throw ParseError(origin + ": missing size line", line_number);
        }
        ++line_number;
        if (!line.empty() && line[0] == '%') {
            continue;
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream sizes(line);
        if (!(sizes >> rows >> cols >> declared_nnz)) {
            throw ParseError(origin + ": malformed size line '" + line + "'", line_number);
        }
        std::string trailing;
        if (sizes >> trailing) {
            throw ParseError(origin + ": trailing content on size line", line_number);
        }
        break;
    }
    if (rows != cols) {
        throw ParseError(origin + ": shift matrices must be square, got " +
                             std::to_string(rows) + "x" + std::to_string(cols),
                         line_number);
    }
    if (rows < 1 || declared_nnz < 0) {
        throw ParseError(origin + ": invalid sizes", line_number);
    }

    EntrySink sink{rows, {}, {}};
    std::int64_t parsed = 0;
    while (parsed < declared_nnz) {
        if (!std::getline(in, line)) {
            throw ParseError(origin + ": expected " + std::to_string(declared_nnz) +
                                 " entries, file ended after " + std::to_string(parsed),
                             line_number);
        }
        ++line_number;
        if (!line.empty() && line[0] == '%') {
            continue;
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream entry(line);
        Index i = 0, j = 0;
        double re = 0.0, im = 0.0;
        bool ok = static_cast<bool>(entry >> i >> j >> re);
        if (ok && complex_field) {
            ok = static_cast<bool>(entry >> im);
        }
        if (!ok) {
            throw ParseError(origin + ": malformed entry '" + line + "'", line_number);
        }
        std::string trailing;
        if (entry >> trailing) {
            throw ParseError(origin + ": trailing content '" + trailing + "'", line_number);
        }
        if (hermitian && i == j && im != 0.0) {
            throw ParseError(origin + ": hermitian diagonal entry with nonzero imaginary part",
                             line_number);
        }
        sink.add(i - 1, j - 1, Complex(re, im), line_number, origin);
        if (i != j) {
            // Symmetric stores a_ji = a_ij, hermitian stores a_ji = conj(a_ij).
            if (symmetric) {
                sink.add(j - 1, i - 1, Complex(re, im), line_number, origin);
            } else if (hermitian) {
                sink.add(j - 1, i - 1, Complex(re, -im), line_number, origin);
            }
        }
        ++parsed;
    }
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line[0] == '%') {
            continue;
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            throw ParseError(origin + ": content after the declared " +
                                 std::to_string(declared_nnz) + " entries",
                             line_number);
        }
    }
    return SparseShift(rows, std::move(sink.entries));
}

void save_matrix_market(const SparseShift& shift, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidArgumentError("save_matrix_market: cannot open '" + path.string() + "'");
    }
    const bool real = shift.is_real();
    out << "%%MatrixMarket matrix coordinate " << (real ? "real" : "complex") << " general\n";
    out << shift.n() << ' ' << shift.n() << ' ' << shift.nnz() << '\n';
    for (const ShiftEntry& e : shift.entries()) {
        out << (e.row + 1) << ' ' << (e.col + 1) << ' ' << exact(e.weight.real());
        if (!real) {
            out << ' ' << exact(e.weight.imag());
        }
        out << '\n';
    }
    if (!out) {
        throw InvalidArgumentError("save_matrix_market: write to '" + path.string() + "' failed");
    }
}

SparseShift load_edge_list(const std::filesystem::path& path, bool weighted) {
    std::ifstream in = open_text(path);
    const std::string origin = path.filename().string();

    struct RawEdge {
        Index src;
        Index dst;
        double weight;
        std::int64_t line;
    };
    std::vector<RawEdge> edges;
    Index max_index = -1;

    std::string line;
    std::int64_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream tokens(line);
        long long src = 0, dst = 0;
        if (!(tokens >> src >> dst)) {
            throw ParseError(origin + ": expected 'src dst [w]', got '" + line + "'",
                             line_number);
        }
        double weight = 1.0;
        std::string third;
        if (tokens >> third) {
            if (!weighted) {
                throw ParseError(origin + ": weight column present but weighted = false",
                                 line_number);
            }
            std::size_t consumed = 0;
            try {
                weight = std::stod(third, &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            if (consumed != third.size()) {
                throw ParseError(origin + ": malformed weight '" + third + "'", line_number);
            }
        }
        std::string trailing;
        if (tokens >> trailing) {
            throw ParseError(origin + ": trailing content '" + trailing + "'", line_number);
        }
        if (src < 0 || dst < 0) {
            throw ParseError(origin + ": negative node index", line_number);
        }
        edges.push_back({static_cast<Index>(src), static_cast<Index>(dst), weight, line_number});
        max_index = std::max({max_index, static_cast<Index>(src), static_cast<Index>(dst)});
    }
    if (edges.empty()) {
        throw ParseError(origin + ": no edges (node count cannot be inferred)", line_number);
    }

    EntrySink sink{max_index + 1, {}, {}};
    for (const RawEdge& e : edges) {
        sink.add(e.src, e.dst, Complex(e.weight, 0.0), e.line, origin);
    }
    return SparseShift(max_index + 1, std::move(sink.entries));
}

void save_edge_list(const SparseShift& shift, const std::filesystem::path& path) {
    if (!shift.is_real()) {
        throw InvalidArgumentError(
            "save_edge_list: the edge-list grammar has no complex weight form");
    }
    std::ofstream out(path);
    if (!out) {
        throw InvalidArgumentError("save_edge_list: cannot open '" + path.string() + "'");
    }
    for (const ShiftEntry& e : shift.entries()) {
        out << e.row << ' ' << e.col << ' ' << exact(e.weight.real()) << '\n';
    }
    if (!out) {
        throw InvalidArgumentError("save_edge_list: write to '" + path.string() + "' failed");
    }
}

SparseShift erdos_renyi(const RandomGraphSpec& spec) {
    if (spec.n < 1) {
        throw InvalidArgumentError("erdos_renyi: n must be at least 1, got " +
                                   std::to_string(spec.n));
    }
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw InvalidArgumentError("erdos_renyi: p must lie in [0, 1], got " +
                                   std::to_string(spec.p));
    }
    SplitMix64 rng(spec.seed);
    std::vector<ShiftEntry> entries;
    for (Index i = 0; i < spec.n; ++i) {
        for (Index j = 0; j < spec.n; ++j) {
            if (i == j && !spec.self_loops) {
                continue;
            }
            if (rng.next_double() < spec.p) {
                entries.push_back({i, j, Complex(1.0, 0.0)});
            }
        }
    }
    return SparseShift(spec.n, std::move(entries));
}

DatasetDescriptor load_descriptor(const std::filesystem::path& path) {
    std::ifstream in = open_text(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.filename().string() + ": invalid JSON: " + e.what(), 0);
    }
    DatasetDescriptor d;
    try {
        d.name = j.at("name").get<std::string>();
        d.expected_n = j.at("expected_n").get<Index>();
        d.expected_nnz = j.at("expected_nnz").get<Index>();
        if (j.contains("sha256") && !j.at("sha256").is_null()) {
            d.sha256 = lower(j.at("sha256").get<std::string>());
        }
        if (j.contains("notes") && !j.at("notes").is_null()) {
            d.notes = j.at("notes").get<std::string>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.filename().string() + ": bad descriptor: " + e.what(), 0);
    }
    return d;
}

SparseShift load_dataset(const DatasetDescriptor& descriptor, const std::filesystem::path& path,
                         GraphFormat format) {
    if (descriptor.sha256.has_value()) {
        const std::string actual = sha256_hex(path);
        if (actual != *descriptor.sha256) {
            throw InvalidArgumentError("load_dataset(" + descriptor.name + "): checksum " +
                                       actual + " does not match descriptor " +
                                       *descriptor.sha256);
        }
    }
    SparseShift shift = format == GraphFormat::matrix_market ? load_matrix_market(path)
                                                             : load_edge_list(path, true);
    if (shift.n() != descriptor.expected_n) {
        throw InvalidArgumentError("load_dataset(" + descriptor.name + "): expected n = " +
                                   std::to_string(descriptor.expected_n) + ", loaded " +
                                   std::to_string(shift.n()));
    }
    if (shift.nnz() != descriptor.expected_nnz) {
        throw InvalidArgumentError("load_dataset(" + descriptor.name + "): expected nnz = " +
                                   std::to_string(descriptor.expected_nnz) + ", loaded " +
                                   std::to_string(shift.nnz()));
    }
    return shift;
}

std::string sha256_hex(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidArgumentError("sha256_hex: cannot open '" + path.string() + "'");
    }
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error("sha256_hex: digest initialization failed");
    }
    char buffer[1 << 16];
    while (in) {
        in.read(buffer, sizeof(buffer));
        const std::streamsize got = in.gcount();
        if (got > 0 && EVP_DigestUpdate(ctx, buffer, static_cast<std::size_t>(got)) != 1) {
            EVP_MD_CTX_free(ctx);
            throw Error("sha256_hex: digest update failed");
        }
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_DigestFinal_ex(ctx, digest, &length) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error("sha256_hex: digest finalization failed");
    }
    EVP_MD_CTX_free(ctx);

    static const char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int b = 0; b < length; ++b) {
        out.push_back(hex[digest[b] >> 4]);
        out.push_back(hex[digest[b] & 0x0f]);
    }
    return out;
}

}  // namespace stablegft::io
