#include "rllsidc/channel.hpp"

#include "rllsidc/errors.hpp"

namespace rllsidc {

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
    // reject the top partial bucket so every residue is equally likely
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) noexcept {
    SplitMix64 mix(base ^ (index * 0xd1b54a32d192ed03ull));
    return mix.next();
}

BitSeq apply_event(const BitSeq& s, const ChannelEvent& e) {
    BitSeq out = s;
    if (e.kind == EditKind::insertion) {
        if (e.position < 1 || e.position > s.size() + 1) {
            throw RangeError("insertion position " + std::to_string(e.position) + " outside [1, " +
                             std::to_string(s.size() + 1) + "]");
        }
        out.insert(e.position - 1, e.symbol);
    } else {
        if (e.position < 1 || e.position > s.size()) {
            throw RangeError("deletion position " + std::to_string(e.position) + " outside [1, " +
                             std::to_string(s.size()) + "]");
        }
        out.erase(e.position - 1);
    }
    return out;
}

ChannelEvent random_event(std::size_t len, std::uint64_t seed, EditKind kind) {
    if (len < 1) throw RangeError("random_event: sequence length must be >= 1");
    SplitMix64 rng(seed);
    ChannelEvent e;
    e.kind = kind;
    if (kind == EditKind::insertion) {
        e.position = static_cast<std::size_t>(rng.below(len + 1)) + 1;
        e.symbol = rng.coin();
    } else {
        e.position = static_cast<std::size_t>(rng.below(len)) + 1;
    }
    return e;
}

ChannelEvent random_event(std::size_t len, std::uint64_t seed) {
    if (len < 1) throw RangeError("random_event: sequence length must be >= 1");
    // first draw picks the kind, the rest come from a derived stream
    SplitMix64 rng(seed);
    const EditKind kind = rng.coin() ? EditKind::insertion : EditKind::deletion;
    return random_event(len, rng.next(), kind);
}

std::string format_event(const ChannelEvent& e) {
    if (e.kind == EditKind::insertion)
        return "insertion " + std::to_string(e.position) + (e.symbol ? " 1" : " 0");
    return "deletion " + std::to_string(e.position) + " -";
}

}  // namespace rllsidc
