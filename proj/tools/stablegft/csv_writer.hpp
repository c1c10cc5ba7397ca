#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace stablegft::cli {

/// Formats a double with 17 significant digits (exact round trip); non-finite
/// values come out as "inf", "-inf", or "nan".
std::string csv_number(double value);

/// Writes one CSV file in the shared output convention: a versioned schema
/// identifier as the first comment line, then the header, then rows. The
/// file only counts as written after close() verifies the stream; the
/// destructor closes without verifying, so callers that care about the exit
/// contract must call close() themselves.
class CsvWriter {
public:
    /// Opens the file and writes "# schema: stablegft.<schema>.v1" plus the
    /// header row. Throws InvalidArgumentError on failure to open.
    CsvWriter(const std::filesystem::path& path, const std::string& schema,
              const std::string& header);
    ~CsvWriter();

    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    /// Writes one row from already-formatted cells.
    void row(const std::vector<std::string>& cells);

    /// Flushes and verifies the stream, throwing InvalidArgumentError on a
    /// failed write.
    void close();

private:
    std::filesystem::path path_;
    std::ofstream out_;
    bool closed_ = false;
};

}  // namespace stablegft::cli
