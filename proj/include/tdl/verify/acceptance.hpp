#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdl::verify {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// "criterion <id> PASS|FAIL <title> (<seconds>s): <detail>"
std::string format_line(const CriterionResult& result);

// Runs the seven acceptance criteria in order and writes one line per
// criterion to `out` as each finishes; property-suite progress goes to `log`.
std::vector<CriterionResult> run_acceptance(std::ostream& out, std::ostream& log, int threads);

}  // namespace tdl::verify
