// Self-contained verification suites exercising every library invariant,
// for the CLI `verify` command. Randomized suites draw directions from a
// seeded generator so runs are reproducible.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace spinpair {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::size_t checks = 0;    // individual assertions evaluated
    double max_error = 0.0;    // worst deviation seen where applicable
    std::string detail;        // non-empty on failure
};

// Runs all suites and returns one result per suite, in a fixed order.
std::vector<SuiteResult> run_verification(std::uint64_t seed);

}  // namespace spinpair
