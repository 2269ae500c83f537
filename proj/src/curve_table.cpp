#include "dynit/curve_table.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dynit {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

constexpr const char* kTimestampKey = "generated_at";

}  // namespace

void CurveTable::add_column(std::string name, std::vector<double> values) {
    if (!columns.empty() && values.size() != columns.front().size())
        throw std::invalid_argument("CurveTable: column '" + name + "' length mismatch");
    names.push_back(std::move(name));
    columns.push_back(std::move(values));
}

const std::vector<double>& CurveTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return columns[i];
    throw std::out_of_range("CurveTable: no column named '" + name + "'");
}

void CurveTable::validate() const {
    if (names.size() != columns.size())
        throw std::logic_error("CurveTable: names/columns size mismatch");
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i].size() != columns.front().size())
            throw std::logic_error("CurveTable: column '" + names[i] + "' length mismatch");
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::logic_error("CurveTable: duplicate column '" + names[i] + "'");
    }
}

void CurveTable::write_csv(std::ostream& os) const {
    validate();
    for (const auto& [k, v] : metadata) os << "# " << k << ": " << v << "\n";
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
    os << "\n";
    for (std::size_t r = 0; r < n_rows(); ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            os << (c ? "," : "") << format_double(columns[c][r]);
        os << "\n";
    }
}

void CurveTable::write_csv_file(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("CurveTable: cannot open '" + path + "' for writing");
    write_csv(f);
}

std::string CurveTable::to_csv() const {
    std::ostringstream os;
    write_csv(os);
    return os.str();
}

CurveTable CurveTable::read_csv(std::istream& is) {
    CurveTable t;
    std::string line;
    bool header_done = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            const auto colon = line.find(':');
            if (colon == std::string::npos || line.size() < 3)
                throw std::runtime_error("CurveTable: malformed metadata line: " + line);
            std::string key = line.substr(2, colon - 2);
            std::string val = line.substr(colon + 1);
            if (!val.empty() && val.front() == ' ') val.erase(0, 1);
            t.metadata[key] = val;
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        if (!header_done) {
            while (std::getline(ss, cell, ',')) {
                t.names.push_back(cell);
                t.columns.emplace_back();
            }
            header_done = true;
            continue;
        }
        std::size_t c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= t.columns.size())
                throw std::runtime_error("CurveTable: row wider than header: " + line);
            t.columns[c++].push_back(std::stod(cell));
        }
        if (c != t.columns.size())
            throw std::runtime_error("CurveTable: row narrower than header: " + line);
    }
    t.validate();
    return t;
}

CurveTable CurveTable::read_csv_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("CurveTable: cannot open '" + path + "'");
    return read_csv(f);
}

bool CurveTable::equals_data(const CurveTable& other) const {
    if (names != other.names || columns != other.columns) return false;
    auto strip = [](const std::map<std::string, std::string>& m) {
        auto copy = m;
        copy.erase(kTimestampKey);
        return copy;
    };
    return strip(metadata) == strip(other.metadata);
}

bool csv_equal_modulo_timestamp(const std::string& a, const std::string& b) {
    auto strip = [](const std::string& s) {
        std::istringstream is(s);
        std::string line, out;
        while (std::getline(is, line)) {
            if (line.rfind(std::string("# ") + kTimestampKey + ":", 0) == 0) continue;
            out += line;
            out += '\n';
        }
        return out;
    };
    return strip(a) == strip(b);
}

}  // namespace dynit
