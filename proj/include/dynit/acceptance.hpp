#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dynit {

struct AcceptanceOptions {
    std::uint64_t seed = 424243;
    std::uint64_t n_samples = 1'000'000;  // base count; individual checks may scale it
    unsigned n_partitions = 8;
    double tail_tol = 1e-12;
    double quad_tol = 1e-8;
    std::string out_dir;  // when set, the determinism check leaves its CSVs here
};

struct CriterionResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;  // measured values and tolerances
};

struct AcceptanceReport {
    std::vector<CriterionResult> criteria;
    bool all_passed() const;
};

// Runs every acceptance criterion at its pinned tolerance.
AcceptanceReport run_acceptance(const AcceptanceOptions& opts);

// One `[PASS]/[FAIL] <id> <name>: <detail>` line per criterion plus a summary.
void print_report(const AcceptanceReport& report, std::ostream& os);

}  // namespace dynit
