#pragma once

#include "ahdet/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ahdet {

struct VerifyOptions {
    std::vector<long> primes = {2, 3, 5};
    int max_ell = 0;               // 0: per-prime default grid
    std::uint64_t seed = 424242;   // randomized identity checks are reproducible
    std::optional<long> fault_index;  // self-test: add 1 to u_n before checking
};

struct CaseResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first failing instance, empty on pass
};

struct VerificationSummary {
    std::string suite = "identity-suite";
    std::vector<CaseResult> cases;

    int cases_run() const { return static_cast<int>(cases.size()); }
    int cases_passed() const;
    bool all_passed() const { return cases_passed() == cases_run(); }
};

// Grid sized so the whole suite runs in seconds with exact arithmetic.
int default_max_ell(long p);

// Runs every identity check over the requested grid. Failures are results,
// not exceptions.
VerificationSummary run_verification(const VerifyOptions& options);

}  // namespace ahdet
