#include "fluxq/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "fluxq/units.hpp"

namespace fluxq {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& tok, double& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && p == last;
}

} // namespace

double unit_factor(const std::string& unit, Dimension dim, const std::string& key) {
    using namespace constants;
    auto fail = [&]() -> double {
        throw UnitError("key '" + key + "': unit '" + unit + "' not valid here");
    };
    switch (dim) {
        case Dimension::none:
            if (unit.empty() || unit == "rad") return 1.0;
            return fail();
        case Dimension::inductance:
            if (unit == "pH") return 1e-12;
            if (unit == "nH") return 1e-9;
            if (unit == "uH") return 1e-6;
            if (unit == "H") return 1.0;
            return fail();
        case Dimension::capacitance:
            if (unit == "fF") return 1e-15;
            if (unit == "pF") return 1e-12;
            if (unit == "nF") return 1e-9;
            if (unit == "F") return 1.0;
            return fail();
        case Dimension::energy:
            if (unit == "ueV") return e_charge * 1e-6;
            if (unit == "meV") return e_charge * 1e-3;
            if (unit == "eV") return e_charge;
            if (unit == "J") return 1.0;
            return fail();
        case Dimension::flux:
            if (unit == "phi0") return phi0;
            if (unit == "Wb") return 1.0;
            return fail();
        case Dimension::frequency:
            if (unit == "Hz") return 1.0;
            if (unit == "kHz") return 1e3;
            if (unit == "MHz") return 1e6;
            if (unit == "GHz") return 1e9;
            return fail();
        case Dimension::temperature:
            if (unit == "mK") return 1e-3;
            if (unit == "K") return 1.0;
            return fail();
        case Dimension::length:
            if (unit == "um") return 1e-6;
            if (unit == "mm") return 1e-3;
            if (unit == "cm") return 1e-2;
            if (unit == "m") return 1.0;
            return fail();
        case Dimension::area:
            if (unit == "um2") return 1e-12;
            if (unit == "mm2") return 1e-6;
            if (unit == "cm2") return 1e-4;
            if (unit == "m2") return 1.0;
            return fail();
        case Dimension::field_density:
            if (unit == "T/sqrtHz") return 1.0;
            if (unit == "pT/sqrtHz") return 1e-12;
            if (unit == "fT/sqrtHz") return 1e-15;
            return fail();
        case Dimension::inductance_per_length:
            if (unit == "nH/mm") return 1e-6;
            if (unit == "H/m") return 1.0;
            return fail();
        case Dimension::capacitance_per_length:
            if (unit == "fF/mm") return 1e-12;
            if (unit == "F/m") return 1.0;
            return fail();
    }
    return fail();
}

Config Config::parse(const std::string& text,
                     const std::map<std::string, Dimension>& allowed) {
    Config cfg;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (size_t h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string rhs = trim(line.substr(eq + 1));
        if (key.empty() || rhs.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty key or value");
        auto it = allowed.find(key);
        if (it == allowed.end())
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (cfg.values_.count(key) || cfg.strings_.count(key))
            throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");

        std::string vtok = rhs, utok;
        if (size_t sp = rhs.find_first_of(" \t"); sp != std::string::npos) {
            vtok = trim(rhs.substr(0, sp));
            utok = trim(rhs.substr(sp));
            if (utok.find_first_of(" \t") != std::string::npos)
                throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after unit");
        }

        double num = 0.0;
        if (!parse_number(vtok, num)) {
            // unit-less word value (mode names etc)
            if (it->second != Dimension::none || !utok.empty())
                throw ParseError("line " + std::to_string(lineno) + ": cannot parse value '" + vtok + "'");
            cfg.strings_[key] = vtok;
            continue;
        }
        double factor = unit_factor(utok, it->second, key);
        cfg.values_[key] = ConfigValue{num * factor, utok, lineno};
    }
    return cfg;
}

double Config::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ParseError("missing required key '" + key + "'");
    return it->second.value;
}

double Config::get_or(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second.value;
}

int Config::get_int(const std::string& key) const {
    double v = get(key);
    double r = std::round(v);
    if (std::abs(v - r) > 1e-9) throw RangeError("key '" + key + "' must be an integer");
    return static_cast<int>(r);
}

int Config::get_int_or(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::string Config::get_string(const std::string& key) const {
    auto it = strings_.find(key);
    if (it == strings_.end()) throw ParseError("missing required key '" + key + "'");
    return it->second;
}

std::string Config::get_string_or(const std::string& key,
                                  const std::string& fallback) const {
    auto it = strings_.find(key);
    return it == strings_.end() ? fallback : it->second;
}

void Config::require(const std::vector<std::string>& keys) const {
    std::string missing;
    for (const auto& k : keys)
        if (!values_.count(k) && !strings_.count(k)) missing += (missing.empty() ? "" : ", ") + k;
    if (!missing.empty()) throw ParseError("missing required keys: " + missing);
}

} // namespace fluxq
