#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "besselhr/core.hpp"

namespace besselhr::cli {

struct Check {
    std::string name;
    bool pass = true;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    double runtime_s = 0.0;
    std::string detail;
};

struct SuiteConfig {
    int n = 0;                              // 0: suite default
    int mmax = 8;
    unsigned long long seed = 20240611ULL;
    std::optional<std::vector<cplx>> lambda;
    bool timing = true;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool pass() const;
    nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();
// throws Error(domain) for an unknown suite
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace besselhr::cli
