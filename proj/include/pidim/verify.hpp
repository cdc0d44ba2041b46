#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pidim {

// One row of the verification table.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs every built-in cross-check: exact small-chain solution, iterative vs
// direct solver, chain xi vs simulated digit frequencies, the exponent
// identity, formula cross-routes, invariance residuals, ratio and decay laws,
// refinement conservation, envelopes, and spectrum sanity. Deterministic for
// a fixed seed; needs no network or external state.
std::vector<CheckResult> run_verification(std::uint64_t seed);

// Fixed-format table used both for stdout and for --out files, so repeated
// runs with equal flags are byte-identical.
std::string format_verification_table(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace pidim
