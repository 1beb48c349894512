#include "rllsidc/campaign.hpp"

#include <exception>
#include <sstream>

#include "rllsidc/channel.hpp"
#include "rllsidc/indel_decoder.hpp"

namespace rllsidc {

namespace {

struct Fnv1a {
    std::uint64_t h = 1469598103934665603ull;
    void add(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
};

}  // namespace

std::string CampaignReport::line() const {
    std::ostringstream os;
    os << "campaign k=" << k << " r=" << r << " seed=" << seed << " trials=" << trials
       << " insertions=" << insertions << " deletions=" << deletions << " failures=" << failures
       << " digest=" << std::hex << digest;
    return os.str();
}

CampaignReport run_campaign(const CodeParams& cp, std::uint64_t seed, std::uint64_t trials) {
    CampaignReport rep;
    rep.k = cp.k();
    rep.r = cp.r();
    rep.seed = seed;
    rep.trials = trials;
    Fnv1a digest;

    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng(trial_seed(seed, t));
        BitSeq u(cp.k() - 1);
        for (std::size_t i = 0; i < u.size(); ++i) u.set(i, rng.coin());

        bool ok = false;
        ChannelEvent e;
        try {
            const BitSeq z = encode_message(cp, u);
            e = random_event(z.size(), rng.next());
            ok = decode_message(cp, apply_event(z, e)) == u;
        } catch (const std::exception&) {
            ok = false;
        }
        if (e.kind == EditKind::insertion)
            ++rep.insertions;
        else
            ++rep.deletions;
        if (!ok) ++rep.failures;

        digest.add(t);
        digest.add(e.kind == EditKind::insertion ? 1 : 0);
        digest.add(e.position);
        digest.add(e.symbol ? 1 : 0);
        digest.add(ok ? 1 : 0);
        digest.add(u.hash());
    }
    rep.digest = digest.h;
    return rep;
}

}  // namespace rllsidc
