#pragma once

#include <string>
#include <vector>

namespace fintop {

enum class SuiteFault {
    none,
    // Hands the universal-property check a deliberately wrong reflection
    // (everything lumped into one block) so the failure path stays exercised.
    bad_reflection,
};

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    int max_n = 0;
    std::vector<PropertyResult> results;

    bool all_pass() const;
    std::string to_text() const;
    std::string to_json() const;
};

// Re-checks the library's advertised laws over exhaustive small enumerations.
// Space-level checks run up to max_n points (at most 4); map-level checks cap
// themselves at 3 points.
SuiteReport run_suite(int max_n, SuiteFault fault = SuiteFault::none);

}  // namespace fintop
