#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace resint::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of the command contract.
enum ExitCode { kOk = 0, kMismatch = 1, kInputError = 2, kBudgetError = 3 };

struct ExecResult {
    int exit_code = kOk;
    nlohmann::json report;
};

/// Runs one CLI command (everything after the program name) and produces
/// the JSON report. Never throws; failures come back as error reports with
/// the matching exit code.
ExecResult execute(const std::vector<std::string>& args);

/// Runs every golden corpus case under `dir` (cases/*.args + cases/*.ri
/// against expected/*.json) and reports pass/fail counts. Timing fields are
/// ignored in comparisons. `workers` <= 0 picks a default.
ExecResult corpus_run(const std::string& dir, int workers = 0);

std::string usage();

} // namespace resint::cli
