#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace euclidsail {

struct CheckResult {
    std::string name;
    std::string scope;
    bool pass;
    std::string detail;  // empty when passing, first mismatch otherwise
};

struct VerifyOptions {
    // Deliberately breaks one closed-form value so the failure path of
    // consumers can be exercised. Never set outside tests.
    bool inject_fault = false;
};

// The one-shot invariant suite: every closed form against its brute-force
// oracle, the lattice partition, the solution <-> central-sailbasis
// bijection, sail geometry, and the Gaussian identity families, all up to
// n_max. Pure and deterministic.
std::vector<CheckResult> run_verification(int64_t n_max, const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace euclidsail
