#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tdl::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

using CheckSink = std::function<void(const CheckResult&)>;

// Randomised and exhaustive invariant checks, one suite per module. Every
// check is seeded, so a run is reproducible. `sink` sees each result as soon
// as it is known.
std::vector<CheckResult> run_property_suites(int threads, const CheckSink& sink = {});

}  // namespace tdl::verify
