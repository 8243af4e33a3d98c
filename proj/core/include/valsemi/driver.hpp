#pragma once

#include <cstdint>
#include <string>

namespace valsemi {

/// One parsed CLI invocation: exactly one command per run.
struct RunConfig {
    std::string command;
    std::string input_path;
    std::string vector_arg;  // membership
    uint64_t layer_degree = 0;
    int64_t severi_n = 0;
    int64_t severi_r = 0;
    int64_t severi_l = 0;
    int64_t severi_d = 0;
    uint64_t max_degree = 64;
    uint64_t seed = 0;
    std::string format = "json";  // json | table
    bool inject_fault = false;    // oracle-check testing hook
};

struct RunResult {
    int exit_code = 0;
    std::string output;  // report text, or the error message on failure
};

/// Executes one command and renders its report. Exit codes: 0 success,
/// 2 validation failure, 3 budget exhaustion, 4 oracle disagreement.
RunResult run_command(const RunConfig& config);

}  // namespace valsemi
