#include "rllsidc/indel_decoder.hpp"

#include <algorithm>
#include <string>

#include "rllsidc/errors.hpp"
#include "rllsidc/rll_front.hpp"

namespace rllsidc {

namespace {

// Candidate weights come from prefix sums so each of the O(n) edits costs
// O(1); the survivors are rechecked with is_codeword before being returned.
std::vector<BitSeq> reinsertions(const CodeParams& cp, const BitSeq& w) {
    const auto a = cp.coefficients();
    const std::size_t len = w.size();  // n - 1
    const std::uint64_t M = cp.modulus();

    // suffix[i] = weight of w[i..] when shifted one place right (a_{j+2} for 0-based j)
    std::vector<std::uint64_t> shifted_suffix(len + 1, 0);
    for (std::size_t i = len; i-- > 0;) shifted_suffix[i] = shifted_suffix[i + 1] + (w[i] ? a[i + 1] : 0);

    std::vector<BitSeq> out;
    std::uint64_t prefix = 0;  // weight of w[0..idx) in place
    for (std::size_t idx = 0; idx <= len; ++idx) {
        for (bool symbol : {false, true}) {
            const std::uint64_t weight = prefix + (symbol ? a[idx] : 0) + shifted_suffix[idx];
            if (weight % M != cp.b()) continue;
            BitSeq z = w;
            z.insert(idx, symbol);
            out.push_back(std::move(z));
        }
        if (idx < len && w[idx]) prefix += a[idx];
    }
    return out;
}

std::vector<BitSeq> deletions(const CodeParams& cp, const BitSeq& w) {
    const auto a = cp.coefficients();
    const std::size_t len = w.size();  // n + 1
    const std::uint64_t M = cp.modulus();

    // after deleting idx, symbol j > idx sits at 0-based position j-1
    std::vector<std::uint64_t> shifted_suffix(len + 1, 0);
    for (std::size_t i = len; i-- > 1;) shifted_suffix[i] = shifted_suffix[i + 1] + (w[i] ? a[i - 1] : 0);

    std::vector<BitSeq> out;
    std::uint64_t prefix = 0;
    for (std::size_t idx = 0; idx < len; ++idx) {
        const std::uint64_t weight = prefix + shifted_suffix[idx + 1];
        if (weight % M == cp.b()) {
            BitSeq z = w;
            z.erase(idx);
            out.push_back(std::move(z));
        }
        if (w[idx] && idx < len - 1) prefix += a[idx];
    }
    return out;
}

}  // namespace

std::vector<BitSeq> candidate_codewords(const CodeParams& cp, const BitSeq& received) {
    const std::size_t n = cp.n();
    std::vector<BitSeq> found;
    if (received.size() == n) {
        if (is_codeword(cp, received)) found.push_back(received);
        return found;
    }
    if (received.size() + 1 == n)
        found = reinsertions(cp, received);
    else if (received.size() == n + 1)
        found = deletions(cp, received);
    else
        throw DataError("received length " + std::to_string(received.size()) + " not in {" +
                        std::to_string(n - 1) + ", " + std::to_string(n) + ", " +
                        std::to_string(n + 1) + "}");

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (const auto& z : found) {
        if (!is_codeword(cp, z)) throw InvariantError("candidate filter admitted a non-codeword");
    }
    return found;
}

BitSeq correct(const CodeParams& cp, const BitSeq& received) {
    auto found = candidate_codewords(cp, received);
    if (found.empty()) {
        throw UncorrectableError(received.size() == cp.n()
                                     ? "word of length n is not a codeword"
                                     : "no codeword within one insertion/deletion");
    }
    if (found.size() > 1) {
        throw InvariantError("two distinct codewords explain " + received.to_string() + ": " +
                             found[0].to_string() + ", " + found[1].to_string());
    }
    return std::move(found.front());
}

BitSeq decode_message(const CodeParams& cp, const BitSeq& received) {
    const BitSeq z = correct(cp, received);
    return front_decode(z.slice(cp.m(), cp.k()), FrontParams(cp.k(), cp.r()));
}

}  // namespace rllsidc
