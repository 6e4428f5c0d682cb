#pragma once

#include "tokgraph/token.hpp"

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace tokgraph {

struct SuiteOptions {
    double table_tol = 5e-4;     ///< comparisons against values printed to a few decimals
    double internal_tol = 1e-8;  ///< comparisons between two computed quantities
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool all_pass() const;
    int failures() const;
    nlohmann::json to_json() const;
    /// One line per check: status, name, lhs, rhs, tol.
    std::string summary() const;
};

/// Suites: "tables" (alias "paper-tables"), "invariants", "all".
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opt = {});

/// The reference eigenvalue multiset of F_2(C_8), as printed to 4 decimals.
const std::vector<double>& reference_f2c8_spectrum();

}  // namespace tokgraph
