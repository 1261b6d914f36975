#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pizza {

struct VerificationCheck
{
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Oracle-equivalence and coefficient-audit checks over seeded random configurations.
[[nodiscard]] std::vector<VerificationCheck> run_verification(std::uint64_t seed, int configurations = 200);

}  // namespace pizza
