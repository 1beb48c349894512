#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rllsidc/bitseq.hpp"
#include "rllsidc/channel.hpp"
#include "rllsidc/sidc_core.hpp"

namespace rllsidc {

// Hard caps: an exhaustive verdict always means exhaustive.
inline constexpr std::size_t kEnumerationGuard = 24;
inline constexpr std::size_t kSidcGuard = 16;
inline constexpr std::size_t kEncoderExhaustiveGuard = 10;
inline constexpr std::size_t kFrontRoundtripGuard = 13;

// {z in {0,1}^n : sum weights_i z_i = residue (mod modulus)}. Built straight
// from coefficient_sequence, or from arbitrary weights for negative controls.
struct WeightedCode {
    std::vector<std::uint64_t> weights;  // a_1 .. a_n
    std::uint64_t modulus = 1;
    std::uint64_t residue = 0;

    static WeightedCode definition(std::size_t n, std::size_t r_hat, std::uint64_t d, std::uint64_t b);
    static WeightedCode from(const CodeParams& cp);

    std::size_t length() const noexcept { return weights.size(); }
    // Symbol i (0-based) of the word is bit i.
    bool contains(std::uint64_t word) const noexcept;
};

// S_{n,r} in lexicographic order. GuardError for n > 24.
std::vector<BitSeq> enumerate_rll(std::size_t n, std::size_t r);

// Lexicographic order. GuardError for n > 24.
std::vector<BitSeq> enumerate_codewords(const WeightedCode& code);
std::vector<BitSeq> enumerate_codewords(std::size_t n, std::size_t r_hat, std::uint64_t d, std::uint64_t b);
std::vector<BitSeq> enumerate_codewords(const CodeParams& cp);

struct SidcWitness {
    BitSeq first;
    BitSeq second;
    BitSeq shared;  // a common single-deletion descendant
};

// True iff the single-deletion balls of distinct codewords are pairwise
// disjoint. GuardError for n > 16. The witness (if given) receives the
// first overlap found.
bool check_sidc(const WeightedCode& code, SidcWitness* witness = nullptr);
bool check_sidc(std::size_t n, std::size_t r_hat, std::uint64_t d, std::uint64_t b);

// Uniform draw from S_{n,r} (n <= 62).
BitSeq sample_rll(std::size_t n, std::size_t r, SplitMix64& rng);

struct CheckReport {
    std::string name;
    std::string params;  // comma separated key=value, no spaces
    bool pass = true;
    std::string counterexample;
    std::vector<std::pair<std::string, std::string>> summary;

    // CHECK <name> <params> PASS|FAIL [counterexample]
    std::string line() const;
    // one line of space separated key=value pairs
    std::string summary_line() const;
};

struct SamplingPlan {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0x5eed;
};

// Single-deletion correctability of C_b for every residue b.
CheckReport check_sidc_all_residues(std::size_t n, std::size_t r_hat, std::uint64_t d);

// Embeds y in S_{k,r} for every residue b and counts outputs outside
// C_b or S_{n,r}. Exhaustive for k <= 10, sampled otherwise. The excluded
// (14, 4, 5) triple is accepted and run sampled; the report only states
// what was observed.
CheckReport check_encoder_rll(std::size_t k, std::size_t r, std::uint64_t d, SamplingPlan plan = {});

// All u in {0,1}^{k-1}: |x| = k, zero runs < r, round trip, distinct outputs.
// GuardError for k > 13; ValidationError for infeasible (k, r).
CheckReport check_front_roundtrip(std::size_t k, std::size_t r);

}  // namespace rllsidc
