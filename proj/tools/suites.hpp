#pragma once

// verify subcommand: one function per suite.

#include "report.hpp"

namespace repdim::cli {

struct SuiteParams {
    std::string family = "heckeA"; // heckeA, group, truncated (xi only)
    int n = 3;
    int ell = 2;                   // ℓ, or p for groups
    std::uint64_t seed = 0;
    std::size_t samples = 20;      // trace
    std::size_t max_degree = 2;    // ext-injectivity
};

struct SuiteResult {
    bool passed = false;
    Json payload;
};

const std::vector<std::string>& suite_names();
/// Usage error for unknown suites or unsupported families.
SuiteResult run_suite(const std::string& name, const SuiteParams& p);

} // namespace repdim::cli
