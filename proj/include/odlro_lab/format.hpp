#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace odlro_lab {

// Deterministic, locale-independent serialization. Every floating-point
// field is written with 17 significant digits in scientific notation with
// a lowercase exponent marker.

std::string fmt_sci(double value);

struct Cell {
    enum class Kind { empty, number, integer, boolean, text };
    Kind kind = Kind::empty;
    std::string repr;
};

Cell cell();
Cell cell(double value);
Cell cell(long long value);
Cell cell(bool value);
Cell cell(std::string text);

struct Table {
    std::string config_comment;  // echoed as "# ..." atop CSV output
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string render_csv(const Table& table);
std::string render_json(const Table& table);

// format is "csv" or "json"; empty out_path writes to stdout.
void write_output(const Table& table, const std::string& out_path,
                  const std::string& format);

}  // namespace odlro_lab
