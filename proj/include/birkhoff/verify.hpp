#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace birkhoff {

struct CaseResult {
    std::string name;
    bool pass;
    double violation;  // worst deviation observed for the case
    double tolerance;  // allowed deviation; pass iff violation <= tolerance
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    int cases_run = 0;
    int cases_failed = 0;
    double worst_violation = 0.0;  // max over cases of (violation - tolerance), floored at 0
    std::vector<CaseResult> per_case;
};

/// Suites: "norms", "mintrace", "radius", "chebyshev", "decompose", or "all".
/// `trials` scales the sample counts (100 reproduces the documented counts);
/// results are deterministic per (suite, seed, trials).
VerificationReport run_suite(const std::string& suite, std::uint64_t seed, int trials);

const std::vector<std::string>& suite_names();

}  // namespace birkhoff
