#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wheelzeta {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;
};

struct VerifyOptions {
    unsigned kmax = 5;  // rim sizes for the grid sweeps
    std::uint64_t seed = 20240521;
    unsigned property_cases = 200;
};

struct CheckInfo {
    int id;
    const char* name;
    double limit_seconds;
};

/// The identity checks in run order.
const std::vector<CheckInfo>& check_catalog();

/// Runs one check by id; exceptions become failures.
CheckResult run_check(int id, const VerifyOptions& opts);

/// "all" or a comma-separated list of ids or names.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

std::string format_result_line(const CheckResult& r);

} // namespace wheelzeta
