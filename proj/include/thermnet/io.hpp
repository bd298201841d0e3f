#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thermnet {

/// Column-oriented numeric CSV. Lines starting with '#' are comments and
/// survive a read in `comments` (provenance stamps live there).
struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> cols;
    std::vector<std::string> comments;

    std::size_t rows() const { return cols.empty() ? 0 : cols[0].size(); }
    const std::vector<double>& col(const std::string& name) const;
    bool has_col(const std::string& name) const;
};

Csv read_csv(const std::string& path);
void write_csv(const std::string& path, const Csv& csv);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
bool file_exists(const std::string& path);

/// Identifies the run that produced an artifact: hash of the governing
/// config bytes plus the global seed.
struct Provenance {
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;

    std::string csv_comment() const;
};

} // namespace thermnet
