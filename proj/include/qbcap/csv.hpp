#pragma once

#include <string>
#include <vector>

#include "qbcap/errors.hpp"

namespace qbcap::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// 17 significant digits: enough for a bit-exact double round trip.
std::string format_value(double v);

/// UTF-8, LF line endings, mandatory header row. Throws IoError.
void write(const std::string& path, const Table& table);

Table read(const std::string& path);

} // namespace qbcap::csv
