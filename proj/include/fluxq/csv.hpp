#ifndef FLUXQ_CSV_HPP
#define FLUXQ_CSV_HPP

#include <string>
#include <vector>

#include "fluxq/errors.hpp"

// Deterministic CSV emitter: header row, LF endings, 17 significant digits,
// byte-identical across reruns.

namespace fluxq {

struct CsvColumn {
    std::string name;
    std::vector<double> values;
};

std::string format_full(double v);  // %.17g

std::string render_csv(const std::vector<CsvColumn>& columns);

// Writes with LF endings regardless of platform.  Throws IoError.
void write_csv(const std::vector<CsvColumn>& columns, const std::string& path);

} // namespace fluxq

#endif
