#pragma once

#include <iosfwd>
#include <vector>

#include "adlvkit/appendixb.hpp"
#include "adlvkit/oracles.hpp"

// The verification battery: one entry per acceptance criterion, each run at
// its pinned tolerance (everything here is exact arithmetic, so tolerance
// means equality). The CLI `suite` subcommand and the acceptance test binary
// both dispatch here.

namespace suite {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct Options {
    int jobs = 1;
    bool e7_exhaustive = true;  // also run the full Weyl scan for E7
    unsigned long long seed = 20260810ull;
    adlv::Int window_override = 0;  // 0: per-case defaults
};

std::vector<CriterionResult> run_acceptance(const Options& opt, std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace suite
