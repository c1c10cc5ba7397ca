#include "stablegft/matrix_dump.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "stablegft/errors.hpp"

namespace stablegft::io {

namespace {

constexpr char kMagic[4] = {'S', 'G', 'F', 'T'};
constexpr std::uint32_t kDtypeComplex128 = 1;

std::string exact(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

}  // namespace

void save_matrix(const ComplexMatrix& matrix, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidArgumentError("save_matrix: cannot open '" + path.string() + "'");
    }
    const std::uint32_t dtype = kDtypeComplex128;
    const std::uint32_t rows = static_cast<std::uint32_t>(matrix.rows());
    const std::uint32_t cols = static_cast<std::uint32_t>(matrix.cols());
    out.write(kMagic, sizeof(kMagic));
    out.write(reinterpret_cast<const char*>(&dtype), sizeof(dtype));
    out.write(reinterpret_cast<const char*>(&rows), sizeof(rows));
    out.write(reinterpret_cast<const char*>(&cols), sizeof(cols));
    // Eigen stores column-major by default, so the buffer is already in
    // file order.
    out.write(reinterpret_cast<const char*>(matrix.data()),
              static_cast<std::streamsize>(sizeof(Complex) * matrix.size()));
    if (!out) {
        throw InvalidArgumentError("save_matrix: write to '" + path.string() + "' failed");
    }
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("load_matrix: cannot open '" + path.string() + "'", 0);
    }
    char magic[4] = {};
    std::uint32_t dtype = 0, rows = 0, cols = 0;
    in.read(magic, sizeof(magic));
    in.read(reinterpret_cast<char*>(&dtype), sizeof(dtype));
    in.read(reinterpret_cast<char*>(&rows), sizeof(rows));
    in.read(reinterpret_cast<char*>(&cols), sizeof(cols));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw ParseError("load_matrix: '" + path.string() + "' has no SGFT header", 0);
    }
    if (dtype != kDtypeComplex128) {
        throw ParseError("load_matrix: unsupported dtype " + std::to_string(dtype), 0);
    }
    ComplexMatrix matrix(rows, cols);
    in.read(reinterpret_cast<char*>(matrix.data()),
            static_cast<std::streamsize>(sizeof(Complex) * matrix.size()));
    if (!in || in.gcount() != static_cast<std::streamsize>(sizeof(Complex) * matrix.size())) {
        throw ParseError("load_matrix: payload shorter than the declared " +
                             std::to_string(rows) + "x" + std::to_string(cols),
                         0);
    }
    char extra = 0;
    if (in.read(&extra, 1)) {
        throw ParseError("load_matrix: payload longer than the declared " +
                             std::to_string(rows) + "x" + std::to_string(cols),
                         0);
    }
    return matrix;
}

void save_matrix_csv(const ComplexMatrix& matrix, const std::filesystem::path& path,
                     const std::string& name) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidArgumentError("save_matrix_csv: cannot open '" + path.string() + "'");
    }
    out << "# schema: stablegft." << name << ".v1\n";
    out << "i,j,re,im\n";
    for (Index j = 0; j < matrix.cols(); ++j) {
        for (Index i = 0; i < matrix.rows(); ++i) {
            out << i << ',' << j << ',' << exact(matrix(i, j).real()) << ','
                << exact(matrix(i, j).imag()) << '\n';
        }
    }
    if (!out) {
        throw InvalidArgumentError("save_matrix_csv: write to '" + path.string() + "' failed");
    }
}

void save_signal_csv(const ComplexVector& signal, const std::filesystem::path& path,
                     const std::string& name) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidArgumentError("save_signal_csv: cannot open '" + path.string() + "'");
    }
    out << "# schema: stablegft." << name << ".v1\n";
    out << "index,real,imag\n";
    for (Index i = 0; i < signal.size(); ++i) {
        out << i << ',' << exact(signal[i].real()) << ',' << exact(signal[i].imag()) << '\n';
    }
    if (!out) {
        throw InvalidArgumentError("save_signal_csv: write to '" + path.string() + "' failed");
    }
}

ComplexVector load_signal_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("load_signal_csv: cannot open '" + path.string() + "'", 0);
    }
    std::vector<Complex> values;
    std::string line;
    std::int64_t line_number = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        std::string cell;
        long long index = 0;
        double re = 0.0, im = 0.0;
        try {
            if (!std::getline(row, cell, ',')) throw std::invalid_argument("index");
            index = std::stoll(cell);
            if (!std::getline(row, cell, ',')) throw std::invalid_argument("real");
            re = std::stod(cell);
            if (!std::getline(row, cell, ',')) throw std::invalid_argument("imag");
            im = std::stod(cell);
        } catch (const std::exception&) {
            throw ParseError("load_signal_csv: malformed row '" + line + "'", line_number);
        }
        if (index != static_cast<long long>(values.size())) {
            throw ParseError("load_signal_csv: expected index " +
                                 std::to_string(values.size()) + ", got " +
                                 std::to_string(index),
                             line_number);
        }
        values.emplace_back(re, im);
    }
    ComplexVector signal(static_cast<Index>(values.size()));
    for (Index i = 0; i < signal.size(); ++i) {
        signal[i] = values[static_cast<std::size_t>(i)];
    }
    return signal;
}

}  // namespace stablegft::io
