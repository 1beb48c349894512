#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "rllsidc/bitseq.hpp"

namespace rllsidc {

// SplitMix64 (Steele, Lea & Flood; public domain reference by S. Vigna).
// Fixed arithmetic, so streams are identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) noexcept;

    bool coin() noexcept { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

// Independent seed for trial `index` of a campaign started from `base`.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) noexcept;

enum class EditKind { insertion, deletion };

// One channel edit. `position` is 1-based: an insertion puts `symbol`
// before position (range [1, len+1]); a deletion removes position
// (range [1, len]). `symbol` is ignored for deletions.
struct ChannelEvent {
    EditKind kind = EditKind::deletion;
    std::size_t position = 1;
    bool symbol = false;

    friend bool operator==(const ChannelEvent&, const ChannelEvent&) = default;
};

// RangeError when the position is outside the valid range for |s|.
BitSeq apply_event(const BitSeq& s, const ChannelEvent& e);

// Kind, position and symbol drawn uniformly from a SplitMix64 stream seeded
// with `seed`. len >= 1.
ChannelEvent random_event(std::size_t len, std::uint64_t seed);
ChannelEvent random_event(std::size_t len, std::uint64_t seed, EditKind kind);

// "insertion <pos> <symbol>" or "deletion <pos> -"
std::string format_event(const ChannelEvent& e);

}  // namespace rllsidc
