#include "qrayleigh/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qrayleigh::csv {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != header.size())
        throw std::invalid_argument("csv row has " + std::to_string(row.size()) + " cells, header has " +
                                    std::to_string(header.size()));
    rows.push_back(std::move(row));
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0"; // folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write(std::ostream& out, const Table& table) {
    auto line = [&out](const auto& cells, auto&& render) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << render(cells[i]);
        }
        out << "\r\n";
    };
    line(table.header, [](const std::string& s) { return quote(s); });
    for (const auto& row : table.rows) {
        line(row, [](const Cell& c) {
            if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
            if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
            return quote(std::get<std::string>(c));
        });
    }
}

void write_file(const std::string& path, const Table& table) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    write(f, table);
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace qrayleigh::csv
