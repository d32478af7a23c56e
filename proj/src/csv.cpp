#include "qbcap/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qbcap::csv {

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write(const std::string& path, const Table& table) {
    std::ofstream out(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!out) throw IoError("cannot open for writing: " + path);

    for (size_t i = 0; i < table.header.size(); ++i) {
        if (i) out << ',';
        out << table.header[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_value(row[i]);
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

Table read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);

    Table table;
    std::string line;
    if (!std::getline(in, line)) throw IoError("missing header row: " + path);
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) table.header.push_back(cell);

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream rs(line);
        while (std::getline(rs, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != table.header.size())
            throw IoError("ragged row in " + path);
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace qbcap::csv
