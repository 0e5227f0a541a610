#ifndef FLUXQ_CONFIG_HPP
#define FLUXQ_CONFIG_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fluxq/errors.hpp"

// Key-value config files, one `key = value [unit]` per line, `#` comments.
// Every physical quantity carries an explicit unit; values are normalized
// to SI on read.

namespace fluxq {

enum class Dimension {
    none,         // dimensionless
    inductance,   // pH nH uH H
    capacitance,  // fF pF nF F
    energy,       // ueV meV eV J
    flux,         // phi0 Wb
    frequency,    // Hz kHz MHz GHz
    temperature,  // mK K
    length,       // um mm cm m
    area,         // um2 mm2 cm2 m2
    field_density,// T/sqrtHz pT/sqrtHz
    inductance_per_length,   // nH/mm H/m
    capacitance_per_length,  // fF/mm F/m
};

struct ConfigValue {
    double value = 0.0;      // SI
    std::string unit;        // unit as written, empty if none
    int line = 0;
};

class Config {
  public:
    // allowed maps key -> required dimension; unknown keys are rejected.
    static Config parse(const std::string& text,
                        const std::map<std::string, Dimension>& allowed);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    double get(const std::string& key) const;
    double get_or(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int_or(const std::string& key, int fallback) const;
    std::string get_string(const std::string& key) const;
    std::string get_string_or(const std::string& key,
                              const std::string& fallback) const;

    const std::map<std::string, ConfigValue>& entries() const { return values_; }

    // keys the caller read, for echoing defaults
    void require(const std::vector<std::string>& keys) const;

  private:
    std::map<std::string, ConfigValue> values_;
    std::map<std::string, std::string> strings_;  // unit-less word values
};

// SI scale factor for a unit token; throws UnitError when the token does not
// belong to the dimension.
double unit_factor(const std::string& unit, Dimension dim, const std::string& key);

} // namespace fluxq

#endif
