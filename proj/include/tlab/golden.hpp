#pragma once

// Small-case construction tables: printed (n, t, s, count) rows with a spec
// string that rebuilds each system. Rows whose printed count cannot be
// reproduced carry `erratum` text explaining why.

#include <cstdint>
#include <string>
#include <vector>

#include "tlab/cnf.hpp"

namespace tlab {

struct GoldenRow {
    std::string table; // "phi0.small", "phi0", "phi1", "phi2o", "phi2d"
    int n = 0, t = 0, s = 0; // s as printed
    std::uint64_t printed = 0;
    std::string label;   // the printed system, in plain text
    std::string spec;    // what is built
    std::string note;    // label or column fixes that keep the printed count
    std::string erratum; // non-empty: printed count is known not to match
};

const std::vector<GoldenRow>& golden_rows();

struct GoldenCheck {
    const GoldenRow* row = nullptr;
    int tau = 0;
    std::uint64_t count = 0;
    bool ok = false;
    std::string problem;
};

// Builds the row (padded to n), then requires tau >= t and count == printed.
GoldenCheck check_golden_row(const GoldenRow& row);

std::vector<GoldenCheck> check_golden_tables(int jobs = 1);

} // namespace tlab
