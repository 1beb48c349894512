#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rllsidc/bitseq.hpp"

namespace rllsidc {

// Coefficients a_1 .. a_{n+1} of the monotone congruence code, stored
// 0-based (element i-1 is a_i):
//   a_i = 2^{i-1}               for i < r_hat
//   a_i = d                     for i = r_hat
//   a_i = 2^{i-2}               for i = r_hat+1, r_hat+2
//   a_i = 2^{r_hat} + i - r_hat - 2  for i >= r_hat+3
// Requires r_hat >= 4 and d in [2^{r_hat-2}+1, 2^{r_hat-1}-1].
std::vector<std::uint64_t> coefficient_sequence(std::size_t n, std::size_t r_hat, std::uint64_t d);

// ceil(log2(k + 2))
std::size_t rhat_for(std::size_t k) noexcept;

enum class ExcludedTriple { reject, allow };

// Validated parameters of C_b(n, r_hat, d) together with the encoder's
// message length k and run-length limit r. Built only by derive_params.
class CodeParams {
public:
    std::size_t k() const noexcept { return k_; }
    std::size_t r_hat() const noexcept { return r_hat_; }
    std::size_t r() const noexcept { return r_; }
    std::uint64_t d() const noexcept { return d_; }
    std::uint64_t b() const noexcept { return b_; }
    std::size_t m() const noexcept { return r_hat_ + 3; }
    std::size_t n() const noexcept { return m() + k_; }
    std::uint64_t modulus() const noexcept { return coefficients_.back(); }
    // a_1 .. a_{n+1}
    std::span<const std::uint64_t> coefficients() const noexcept { return coefficients_; }

    std::uint64_t d_min() const noexcept { return (std::uint64_t{1} << (r_hat_ - 2)) + 1; }
    std::uint64_t d_max() const noexcept { return (std::uint64_t{1} << (r_hat_ - 1)) - 1; }

    // Same code with a different residue b.
    CodeParams with_residue(std::uint64_t b) const;

private:
    friend CodeParams derive_params(std::size_t, std::size_t, std::optional<std::uint64_t>,
                                    std::optional<std::uint64_t>, ExcludedTriple);
    CodeParams() = default;

    std::size_t k_ = 0;
    std::size_t r_hat_ = 0;
    std::size_t r_ = 0;
    std::uint64_t d_ = 0;
    std::uint64_t b_ = 0;
    std::vector<std::uint64_t> coefficients_;
};

// d defaults to 2^{r_hat-1} - 1 and b to 0. Every violated constraint raises
// a ValidationError naming it. `allow` is for the verification oracles
// that need to run the excluded (14, 4, 5) triple.
CodeParams derive_params(std::size_t k, std::size_t r, std::optional<std::uint64_t> d = std::nullopt,
                         std::optional<std::uint64_t> b = std::nullopt,
                         ExcludedTriple excluded = ExcludedTriple::reject);

// key=value lines: k, r_hat, r, d, b, m, n, modulus
std::string to_key_value(const CodeParams& cp);

// a_i, 1 <= i <= n+1
std::uint64_t coefficient(const CodeParams& cp, std::size_t i);

std::uint64_t mu(const CodeParams& cp, const BitSeq& z);
bool is_codeword(const CodeParams& cp, const BitSeq& z);

// q (r_hat + 1 symbols, little-endian) making p y a codeword for the given
// p_{r_hat} and p_m.
BitSeq parity_solve(const CodeParams& cp, bool p_rhat, bool p_m, const BitSeq& y);
// Lays q out over positions 1..r_hat-1, r_hat+1, r_hat+2 and fills in
// p_{r_hat} and p_m.
BitSeq assemble_parity(const CodeParams& cp, const BitSeq& q, bool p_rhat, bool p_m);

struct EmbedTrace {
    BitSeq first_parity;   // parity with p_{r_hat} = 0
    bool fallback = false; // first parity had a run longer than r
    BitSeq parity;         // parity actually used
    BitSeq codeword;       // parity followed by y
};

// Runs the embedding steps without the post-hoc run-length check.
// Precondition failures (|y| != k, y not r-RLL) throw DataError.
EmbedTrace embed_trace(const CodeParams& cp, const BitSeq& y);
// embed_trace plus the guarantees: codeword membership and max run <= r.
BitSeq embed_encode(const CodeParams& cp, const BitSeq& y);

// u (k-1 symbols) -> front-end -> embed.
BitSeq encode_message(const CodeParams& cp, const BitSeq& u);
BitSeq encode_message(const BitSeq& u, std::size_t k, std::size_t r,
                      std::optional<std::uint64_t> d = std::nullopt,
                      std::optional<std::uint64_t> b = std::nullopt);

}  // namespace rllsidc
