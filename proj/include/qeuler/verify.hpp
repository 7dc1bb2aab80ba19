#pragma once

// Verification suites over the library's identities and interpolation
// properties, as run by `qeuler verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace qeuler {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    /// Case count on success; the first failing case with its exact residual
    /// otherwise. Padic checks also carry the valuation table.
    std::string detail;
};

struct VerifyOptions {
    /// Subset of verification_suites(); empty or {"all"} runs everything.
    std::vector<std::string> suites;
    std::uint64_t seed = 1;
    /// Perturbs the first identity residual by 1 (exercises the failure path).
    bool inject_failure = false;
};

const std::vector<std::string>& verification_suites();

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace qeuler
