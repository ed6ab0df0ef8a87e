#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kdsim {

/// Scientific notation with nine significant digits, '.' decimal point,
/// independent of the global locale.
std::string format_number(double value);

/// Minimal CSV writer. Metadata lines are emitted first as "# key=value";
/// cells containing commas, quotes or newlines are quoted.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> columns);

    void add_metadata(std::string key, std::string value);
    void add_row(std::vector<std::string> cells);

    std::string str() const;
    std::size_t rows() const { return rows_.size(); }

private:
    std::vector<std::pair<std::string, std::string>> metadata_;
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace kdsim
