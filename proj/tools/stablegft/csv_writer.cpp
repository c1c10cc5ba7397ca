#include "csv_writer.hpp"

#include <cmath>
#include <cstdio>

#include "stablegft/errors.hpp"

namespace stablegft::cli {

std::string csv_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::string& schema,
                     const std::string& header)
    : path_(path), out_(path) {
    if (!out_) throw InvalidArgumentError("csv: cannot open '" + path.string() + "'");
    out_ << "# schema: stablegft." << schema << ".v1\n" << header << "\n";
}

CsvWriter::~CsvWriter() {
    if (!closed_) out_.close();
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

void CsvWriter::close() {
    out_.close();
    closed_ = true;
    if (out_.fail())
        throw InvalidArgumentError("csv: write to '" + path_.string() + "' failed");
}

}  // namespace stablegft::cli
