#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "rllsidc/sidc_core.hpp"

namespace rllsidc {

struct CampaignReport {
    std::size_t k = 0;
    std::size_t r = 0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t insertions = 0;
    std::uint64_t deletions = 0;
    std::uint64_t failures = 0;
    std::uint64_t digest = 0;  // FNV-1a over every trial's event and outcome

    std::string line() const;
};

// Per trial: random message, encode, one random insertion or deletion,
// decode, compare. Trial i draws everything from trial_seed(seed, i), so the
// report depends only on (cp, seed, trials).
CampaignReport run_campaign(const CodeParams& cp, std::uint64_t seed, std::uint64_t trials);

}  // namespace rllsidc
