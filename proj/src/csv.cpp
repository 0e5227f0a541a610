#include "fluxq/csv.hpp"

#include <cstdio>
#include <fstream>

namespace fluxq {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string render_csv(const std::vector<CsvColumn>& columns) {
    if (columns.empty()) throw IoError("render_csv: no columns");
    size_t rows = columns.front().values.size();
    for (const auto& c : columns)
        if (c.values.size() != rows)
            throw IoError("render_csv: column '" + c.name + "' length mismatch");
    std::string out;
    for (size_t j = 0; j < columns.size(); ++j) {
        if (j) out += ',';
        out += columns[j].name;
    }
    out += '\n';
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < columns.size(); ++j) {
            if (j) out += ',';
            out += format_full(columns[j].values[i]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<CsvColumn>& columns, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("write_csv: cannot open " + path);
    f << render_csv(columns);
    if (!f) throw IoError("write_csv: write failed for " + path);
}

} // namespace fluxq
