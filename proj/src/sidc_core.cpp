#include "rllsidc/sidc_core.hpp"

#include <bit>
#include <sstream>

#include "rllsidc/errors.hpp"
#include "rllsidc/rll_front.hpp"

namespace rllsidc {

namespace {

constexpr std::size_t kMaxMessageLength = std::size_t{1} << 24;

std::uint64_t pow2(std::size_t e) { return std::uint64_t{1} << e; }

void require_length(const BitSeq& s, std::size_t expected, const char* what) {
    if (s.size() != expected) {
        throw DataError(std::string(what) + ": length " + std::to_string(s.size()) + ", expected " +
                        std::to_string(expected));
    }
}

}  // namespace

std::vector<std::uint64_t> coefficient_sequence(std::size_t n, std::size_t r_hat, std::uint64_t d) {
    if (r_hat < 4 || r_hat > 40) {
        throw ValidationError(Constraint::rhat_too_small,
                              "r_hat must lie in [4, 40], got " + std::to_string(r_hat));
    }
    const std::uint64_t lo = pow2(r_hat - 2) + 1;
    const std::uint64_t hi = pow2(r_hat - 1) - 1;
    if (d < lo || d > hi) {
        throw ValidationError(Constraint::d_out_of_range, "d=" + std::to_string(d) + " outside [" +
                                                              std::to_string(lo) + ", " +
                                                              std::to_string(hi) + "]");
    }
    std::vector<std::uint64_t> a;
    a.reserve(n + 1);
    for (std::size_t i = 1; i <= n + 1; ++i) {
        if (i < r_hat)
            a.push_back(pow2(i - 1));
        else if (i == r_hat)
            a.push_back(d);
        else if (i <= r_hat + 2)
            a.push_back(pow2(i - 2));
        else
            a.push_back(pow2(r_hat) + i - r_hat - 2);
    }
    return a;
}

std::size_t rhat_for(std::size_t k) noexcept {
    return static_cast<std::size_t>(std::bit_width(k + 1));
}

CodeParams CodeParams::with_residue(std::uint64_t b) const {
    if (b >= modulus()) {
        throw ValidationError(Constraint::b_out_of_range, "b=" + std::to_string(b) +
                                                              " outside [0, " +
                                                              std::to_string(modulus() - 1) + "]");
    }
    CodeParams copy = *this;
    copy.b_ = b;
    return copy;
}

CodeParams derive_params(std::size_t k, std::size_t r, std::optional<std::uint64_t> d,
                         std::optional<std::uint64_t> b, ExcludedTriple excluded) {
    if (k < 7) {
        throw ValidationError(Constraint::message_length_too_small,
                              "k must be >= 7, got k=" + std::to_string(k));
    }
    if (k > kMaxMessageLength) {
        throw ValidationError(Constraint::message_length_too_large,
                              "k must be <= " + std::to_string(kMaxMessageLength) +
                                  ", got k=" + std::to_string(k));
    }
    CodeParams cp;
    cp.k_ = k;
    cp.r_ = r;
    cp.r_hat_ = rhat_for(k);
    if (r < cp.r_hat_) {
        throw ValidationError(Constraint::run_length_below_rhat,
                              "r=" + std::to_string(r) + " is below r_hat=" +
                                  std::to_string(cp.r_hat_) + " for k=" + std::to_string(k));
    }
    FrontParams front(k, r);  // feasibility of the front-end for (k, r)

    cp.d_ = d.value_or(cp.d_max());
    cp.coefficients_ = coefficient_sequence(cp.n(), cp.r_hat_, cp.d_);

    if (excluded == ExcludedTriple::reject && k == 14 && r == 4 && cp.d_ == 5) {
        throw ValidationError(Constraint::excluded_triple,
                              "(k, r, d) = (14, 4, 5) is excluded: the parity fallback cannot "
                              "bound the run-length there");
    }
    return cp.with_residue(b.value_or(0));
}

std::string to_key_value(const CodeParams& cp) {
    std::ostringstream os;
    os << "k=" << cp.k() << '\n'
       << "r_hat=" << cp.r_hat() << '\n'
       << "r=" << cp.r() << '\n'
       << "d=" << cp.d() << '\n'
       << "b=" << cp.b() << '\n'
       << "m=" << cp.m() << '\n'
       << "n=" << cp.n() << '\n'
       << "modulus=" << cp.modulus() << '\n';
    return os.str();
}

std::uint64_t coefficient(const CodeParams& cp, std::size_t i) {
    if (i < 1 || i > cp.n() + 1) {
        throw RangeError("coefficient index " + std::to_string(i) + " outside [1, " +
                         std::to_string(cp.n() + 1) + "]");
    }
    return cp.coefficients()[i - 1];
}

std::uint64_t mu(const CodeParams& cp, const BitSeq& z) {
    require_length(z, cp.n(), "mu");
    const auto a = cp.coefficients();
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i]) sum += a[i];
    return sum;
}

bool is_codeword(const CodeParams& cp, const BitSeq& z) {
    require_length(z, cp.n(), "is_codeword");
    return mu(cp, z) % cp.modulus() == cp.b();
}

BitSeq parity_solve(const CodeParams& cp, bool p_rhat, bool p_m, const BitSeq& y) {
    require_length(y, cp.k(), "parity_solve");
    const auto a = cp.coefficients();
    const std::uint64_t M = cp.modulus();
    const std::size_t m = cp.m();

    // every term is reduced mod M before subtracting so the residue stays non-negative
    std::uint64_t rhs = cp.b() % M;
    auto subtract = [&](std::uint64_t term) { rhs = (rhs + M - term % M) % M; };
    if (p_rhat) subtract(cp.d());
    if (p_m) subtract(a[m - 1]);
    std::uint64_t sigma = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
        if (y[j]) sigma += a[m + j];
    subtract(sigma);
    return le_encode(rhs, cp.r_hat() + 1);
}

BitSeq assemble_parity(const CodeParams& cp, const BitSeq& q, bool p_rhat, bool p_m) {
    require_length(q, cp.r_hat() + 1, "assemble_parity");
    const std::size_t rh = cp.r_hat();
    BitSeq p(cp.m());
    for (std::size_t i = 0; i + 1 < rh; ++i) p.set(i, q[i]);  // positions 1..r_hat-1
    p.set(rh - 1, p_rhat);
    p.set(rh, q[rh - 1]);      // position r_hat+1, weight 2^{r_hat-1}
    p.set(rh + 1, q[rh]);      // position r_hat+2, weight 2^{r_hat}
    p.set(rh + 2, p_m);
    return p;
}

EmbedTrace embed_trace(const CodeParams& cp, const BitSeq& y) {
    require_length(y, cp.k(), "embed_encode");
    if (!is_rll(y, cp.r())) {
        throw DataError("embed_encode: input has a run of " + std::to_string(max_run_length(y)) +
                        " > r=" + std::to_string(cp.r()));
    }
    EmbedTrace t;
    const bool p_m = !y[0];
    t.first_parity = assemble_parity(cp, parity_solve(cp, false, p_m, y), false, p_m);
    t.parity = t.first_parity;
    if (max_run_length(t.first_parity) > cp.r()) {
        t.fallback = true;
        t.parity = assemble_parity(cp, parity_solve(cp, true, p_m, y), true, p_m);
    }
    t.codeword = t.parity + y;
    return t;
}

BitSeq embed_encode(const CodeParams& cp, const BitSeq& y) {
    EmbedTrace t = embed_trace(cp, y);
    if (!is_codeword(cp, t.codeword)) {
        throw InvariantError("embed_encode: output misses the congruence for " + y.to_string());
    }
    if (!is_rll(t.codeword, cp.r())) {
        throw InvariantError("embed_encode: output " + t.codeword.to_string() +
                             " exceeds run-length " + std::to_string(cp.r()));
    }
    return std::move(t.codeword);
}

BitSeq encode_message(const CodeParams& cp, const BitSeq& u) {
    require_length(u, cp.k() - 1, "encode_message");
    return embed_encode(cp, front_encode(u, FrontParams(cp.k(), cp.r())));
}

BitSeq encode_message(const BitSeq& u, std::size_t k, std::size_t r, std::optional<std::uint64_t> d,
                      std::optional<std::uint64_t> b) {
    return encode_message(derive_params(k, r, d, b), u);
}

}  // namespace rllsidc
