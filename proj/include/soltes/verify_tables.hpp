#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "soltes/analysis.hpp"

namespace soltes {

/// One row of the expected-values fixture (data/expected_families.csv):
/// the reference order, Wiener index, cycle delta and R_m of a named
/// family member, plus the reference 3-decimal rendering of R_m.
struct ExpectedRow {
    std::string family;
    int param = 0;
    int n = 0, k = 0, l = 0, n0 = 0;
    std::int64_t t0 = 0;
    std::int64_t order = 0;
    std::int64_t wiener = 0;
    std::int64_t m = 0;
    std::int64_t r_num = 0, r_den = 1;
    std::string r_decimal;

    std::string selector() const;
};

/// Loads the fixture CSV. Keeping the expectations in data rather than in
/// code separates "implementation wrong" from "expectation wrong".
std::vector<ExpectedRow> load_expected_rows(const std::string& path);

struct RowOutcome {
    ExpectedRow row;
    bool skipped = false;            // order above the verification cap
    InstanceReport report;
    std::vector<std::string> failures;

    bool passed() const { return skipped || failures.empty(); }
};

/// Builds the row's graph and compares every reference value exactly
/// (order, W, cycle delta, exact R_m) plus the closed forms against BFS.
/// The decimal rendering check accepts the round-half-up and the truncated
/// 3-decimal form, since reference tables are not consistent about which
/// they print.
RowOutcome check_row(const ExpectedRow& row, int threads = 1, std::int64_t cap = 5000);

/// Perfect-matching corollary at odd m: the graph is (m+7)-regular, keeps
/// cycle delta m and R_m, and loses n*l/2 from W relative to the base row.
std::vector<std::string> check_matching_corollary(const ExpectedRow& base_row, int threads = 1);

/// Edge-insertion corollary: s extra gadget edges drop W by n*s per edge
/// set while the cycle delta and R_m stay put.
std::vector<std::string> check_insertion_corollary(const ExpectedRow& base_row, int s,
                                                   int threads = 1);

}  // namespace soltes
