#include "kdsim/csv.hpp"

#include <charconv>
#include <cmath>

#include "kdsim/error.hpp"

namespace kdsim {

std::string format_number(double value)
{
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, 8);
    if (ec != std::errc{}) throw Error("number formatting failed");
    return std::string(buf, end);
}

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvTable::add_metadata(std::string key, std::string value)
{
    metadata_.emplace_back(std::move(key), std::move(value));
}

void CsvTable::add_row(std::vector<std::string> cells)
{
    if (cells.size() != columns_.size()) throw Error("csv row width does not match header");
    rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const
{
    std::string out;
    for (const auto& [k, v] : metadata_) out += "# " + k + "=" + v + "\n";
    auto emit = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            const auto& cell = cells[i];
            if (cell.find_first_of(",\"\n") == std::string::npos) {
                out += cell;
                continue;
            }
            out += '"';
            for (char ch : cell) {
                if (ch == '"') out += '"';
                out += ch;
            }
            out += '"';
        }
        out += '\n';
    };
    emit(columns_);
    for (const auto& row : rows_) emit(row);
    return out;
}

}  // namespace kdsim
