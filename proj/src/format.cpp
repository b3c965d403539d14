#include "odlro_lab/format.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace odlro_lab {

std::string fmt_sci(double value) {
    std::array<char, 40> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::scientific, 16);
    if (res.ec != std::errc{}) throw std::logic_error("fmt_sci: to_chars failed");
    return std::string(buf.data(), res.ptr);
}

Cell cell() { return Cell{}; }

Cell cell(double value) { return Cell{Cell::Kind::number, fmt_sci(value)}; }

Cell cell(long long value) { return Cell{Cell::Kind::integer, std::to_string(value)}; }

Cell cell(bool value) { return Cell{Cell::Kind::boolean, value ? "true" : "false"}; }

Cell cell(std::string text) {
    // keep the CSV single-schema: cells never contain the separator
    for (char& ch : text)
        if (ch == ',' || ch == '\n') ch = ';';
    return Cell{Cell::Kind::text, std::move(text)};
}

std::string render_csv(const Table& table) {
    std::string out;
    if (!table.config_comment.empty()) {
        out += "# ";
        out += table.config_comment;
        out += '\n';
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i].repr;
        }
        out += '\n';
    }
    return out;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string render_json(const Table& table) {
    std::string out = "[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out += r ? ",\n " : "\n ";
        out += '{';
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += '"';
            out += table.columns[i];
            out += "\":";
            switch (row[i].kind) {
                case Cell::Kind::empty: out += "null"; break;
                case Cell::Kind::number:
                case Cell::Kind::integer:
                case Cell::Kind::boolean: out += row[i].repr; break;
                case Cell::Kind::text:
                    out += '"';
                    out += json_escape(row[i].repr);
                    out += '"';
                    break;
            }
        }
        out += '}';
    }
    out += "\n]\n";
    return out;
}

void write_output(const Table& table, const std::string& out_path,
                  const std::string& format) {
    if (format != "csv" && format != "json")
        throw std::invalid_argument("write_output: format must be csv or json");
    const std::string payload = format == "csv" ? render_csv(table) : render_json(table);
    if (out_path.empty()) {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    file << payload;
    if (!file) throw std::runtime_error("write failed: " + out_path);
}

}  // namespace odlro_lab
