// verification.hpp
// Invariant checks run by `rootbench verify`.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rootbench {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Cover lemma on `states` random benchmark-1 and benchmark-2 states,
/// oracle dominance, dynamics invariants, determinism and budget audits.
std::vector<CheckResult> run_verification(std::uint64_t seed, int states = 1000);

}  // namespace rootbench
