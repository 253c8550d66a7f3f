#pragma once

// Column-oriented output in CSV or JSON. Numbers are written with 17
// significant digits and '.' as decimal point regardless of locale.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace singlet::cli {

using Cell = std::variant<double, std::string>;

struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_number(double value);
std::string json_escape(const std::string& text);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

}  // namespace singlet::cli
