#include "memwalk/cli/table.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "memwalk/errors.hpp"

namespace memwalk::cli {

void Table::add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }

void Table::add_meta(std::string key, double value) { add_meta(std::move(key), format_double(value)); }

const std::string* Table::find_meta(const std::string& key) const {
    for (const auto& [k, v] : meta)
        if (k == key) return &v;
    return nullptr;
}

void write_csv(std::ostream& os, const Table& t) {
    for (const auto& [k, v] : t.meta) os << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t) {
    nlohmann::ordered_json j;
    j["meta"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.meta) j["meta"][k] = v;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    os << j.dump(1) << '\n';
}

Table parse_csv(std::istream& is) {
    Table t;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (!header_seen && line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw InvalidInput("malformed metadata line: " + line);
            t.add_meta(line.substr(2, eq - 2), line.substr(eq + 1));
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!header_seen) {
            t.columns = cells;
            header_seen = true;
            continue;
        }
        std::vector<double> row;
        for (const auto& c : cells) {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
            if (ec != std::errc{} || ptr != c.data() + c.size()) throw InvalidInput("bad numeric cell: " + c);
            row.push_back(v);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_table(const Table& t, OutputFormat format, const std::string& path) {
    auto emit = [&](std::ostream& os) {
        if (format == OutputFormat::csv) {
            write_csv(os, t);
        } else {
            write_json(os, t);
        }
    };
    if (path == "-") {
        emit(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open '" + path + "' for writing");
    emit(f);
    if (!f) throw InvalidInput("failed writing '" + path + "'");
}

}  // namespace memwalk::cli
