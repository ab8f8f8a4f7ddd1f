#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewcap {

struct PropertyResult {
    std::string name;
    int passed;
    int total;
    bool ok() const { return passed == total; }
};

struct SuiteReport {
    std::uint64_t seed;
    std::vector<PropertyResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.ok()) return false;
        return true;
    }
};

// Every module's randomized invariant suite under one seed. Deterministic:
// the same seed yields the same report, byte for byte.
SuiteReport run_suite(std::uint64_t seed);

std::string suite_report_text(const SuiteReport& rep);

}  // namespace skewcap
