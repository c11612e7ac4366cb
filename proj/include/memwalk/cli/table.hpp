#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "memwalk/cli/config.hpp"

namespace memwalk::cli {

// Numeric table with ordered key=value metadata.
struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_meta(std::string key, std::string value);
    void add_meta(std::string key, double value);
    const std::string* find_meta(const std::string& key) const;

    friend bool operator==(const Table&, const Table&) = default;
};

// CSV: "# key=value" lines, a header line, then rows at 17 significant digits.
// LF line endings.
void write_csv(std::ostream& os, const Table& t);

// {"meta": {...}, "columns": [...], "rows": [[...], ...]}
void write_json(std::ostream& os, const Table& t);

// Inverse of write_csv.
Table parse_csv(std::istream& is);

// "-" writes to stdout. Throws InvalidInput if the file cannot be opened.
void write_table(const Table& t, OutputFormat format, const std::string& path);

}  // namespace memwalk::cli
