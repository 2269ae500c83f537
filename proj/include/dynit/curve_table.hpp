#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace dynit {

// Named result series of equal length plus enough metadata to re-run the
// producing experiment bit-identically.  Serialized as CSV with `# key: value`
// header lines; the generated_at line is informational and excluded from
// equality.
struct CurveTable {
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
    std::map<std::string, std::string> metadata;

    std::size_t n_rows() const { return columns.empty() ? 0 : columns.front().size(); }
    void add_column(std::string name, std::vector<double> values);
    const std::vector<double>& column(const std::string& name) const;

    void validate() const;  // equal lengths, unique names

    void write_csv(std::ostream& os) const;
    void write_csv_file(const std::string& path) const;
    std::string to_csv() const;

    static CurveTable read_csv(std::istream& is);
    static CurveTable read_csv_file(const std::string& path);

    // Field-by-field equality, metadata timestamp excluded.
    bool equals_data(const CurveTable& other) const;
};

// Byte comparison of two serialized tables with generated_at lines dropped.
bool csv_equal_modulo_timestamp(const std::string& a, const std::string& b);

}  // namespace dynit
