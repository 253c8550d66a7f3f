#include "table.hpp"

#include <fmt/format.h>

#include <cmath>
#include <ostream>

namespace singlet::cli {

std::string format_number(double value) {
    if (!std::isfinite(value)) return "null";
    // fmt ignores the global locale unless asked for it with 'L'.
    return fmt::format("{:.17g}", value);
}

std::string json_escape(const std::string& text) {
    std::string r;
    r.reserve(text.size() + 2);
    for (char c : text) {
        switch (c) {
            case '"': r += "\\\""; break;
            case '\\': r += "\\\\"; break;
            case '\n': r += "\\n"; break;
            case '\t': r += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    r += fmt::format("\\u{:04x}", static_cast<int>(c));
                } else {
                    r += c;
                }
        }
    }
    return r;
}

namespace {

std::string csv_cell(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
    return std::get<std::string>(cell);
}

std::string json_cell(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
    return "\"" + json_escape(std::get<std::string>(cell)) + "\"";
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_cell(row[i]);
        }
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    out << "{\n  \"schema_version\": 1,\n  \"command\": \"" << json_escape(table.command)
        << "\",\n  \"columns\": [";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ", ";
        out << '"' << json_escape(table.columns[i]) << '"';
    }
    out << "],\n  \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",\n    [" : "\n    [");
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ", ";
            out << json_cell(row[i]);
        }
        out << ']';
    }
    out << (table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

}  // namespace singlet::cli
