#pragma once

#include <cstddef>
#include <cstdint>

#include "rllsidc/bitseq.hpp"

namespace rllsidc {

// (k, r) for the constrained front-end: messages of k-1 symbols become
// k-symbol words whose maximum run-length is at most r.
class FrontParams {
public:
    // Throws ValidationError when r < 2, k < 2, k exceeds 2^r + r - 5, or
    // (for r >= 5) k is one of the two top lengths where the replacement
    // encoder stops being injective.
    FrontParams(std::size_t k, std::size_t r);

    std::size_t k() const noexcept { return k_; }
    std::size_t r() const noexcept { return r_; }

    // Largest k accepted for a given r (0 when no k is feasible).
    static std::size_t max_length(std::size_t r) noexcept;

private:
    std::size_t k_;
    std::size_t r_;
};

// 0^{s-(t+1)v} (1^t 0)^v with v = floor(s/(t+1)); always s symbols long.
BitSeq omega(std::size_t s, std::size_t t);

struct WiEncoding {
    BitSeq codeword;
    std::size_t replacements = 0;
};

// Sequence-replacement encoder. Output x = v_s 1 omega(s, r-1) has length k
// and no run of r zeros.
WiEncoding wi_encode_traced(const BitSeq& u, const FrontParams& fp);
BitSeq wi_encode(const BitSeq& u, const FrontParams& fp);
// Exact inverse of wi_encode; DataError on anything wi_encode cannot emit.
BitSeq wi_decode(const BitSeq& x, const FrontParams& fp);

BitSeq nrzi_encode(const BitSeq& x);
BitSeq nrzi_decode(const BitSeq& y);

// WI followed by NRZI; output is k symbols in S_{k,r}.
BitSeq front_encode(const BitSeq& u, const FrontParams& fp);
BitSeq front_decode(const BitSeq& y, const FrontParams& fp);

}  // namespace rllsidc
