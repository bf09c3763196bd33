// csv.hpp: RFC 4180 tables with lossless double formatting

#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace qrayleigh::csv {

using Cell = std::variant<double, long long, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

// 17 significant digits, "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double x);
// Quotes fields containing separators, quotes or line breaks.
std::string quote(const std::string& field);

void write(std::ostream& out, const Table& table);
void write_file(const std::string& path, const Table& table);

} // namespace qrayleigh::csv
