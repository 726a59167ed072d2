#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace delannoy {

struct CriterionInfo {
    std::string id;    // "AC01" .. "AC12"
    std::string group; // grid, genfun, recurrence, asymptotics
    std::string title;
};

const std::vector<CriterionInfo>& criteria();

struct SuiteOptions {
    /// Empty for everything, a group name, or a criterion id.
    std::string only;
    /// Criterion id whose result is forced to fail (test hook for the report path).
    std::string inject_fault;
    std::uint64_t seed = 20210611;
};

struct CriterionResult {
    CriterionInfo info;
    bool pass = false;
    std::string observed, expected, tolerance;
    double seconds = 0.0;
};

/// Runs the selected criteria in id order. Throws std::invalid_argument when
/// `only` matches neither a group nor an id.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts = {});

/// [{"criterion","status","observed","expected","tolerance","seconds"}, ...]
nlohmann::ordered_json suite_report_json(const std::vector<CriterionResult>& results);

} // namespace delannoy
