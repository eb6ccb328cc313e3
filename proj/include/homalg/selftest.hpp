#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace homalg {

struct SelftestCheck {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail;  // first failure, if any

    bool passed() const noexcept { return failures == 0; }
};

struct SelftestReport {
    std::uint64_t seed = 0;
    std::vector<SelftestCheck> checks;

    bool passed() const noexcept;
};

/// Randomized property suite at a size that runs in seconds.
SelftestReport run_selftest(std::uint64_t seed);

}  // namespace homalg
