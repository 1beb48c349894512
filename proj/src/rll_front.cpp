#include "rllsidc/rll_front.hpp"

#include <optional>
#include <string>
#include <vector>

#include "rllsidc/errors.hpp"

namespace rllsidc {

namespace {

// Above this r every k we could store is far below 2^r.
constexpr std::size_t kUnboundedRun = 40;

std::string params_tag(const FrontParams& fp) {
    return "(k=" + std::to_string(fp.k()) + ", r=" + std::to_string(fp.r()) + ")";
}

// 0-based start of the leftmost 0^r 1 inside v·1, if any.
std::optional<std::size_t> find_forbidden(const BitSeq& v, std::size_t r) {
    std::size_t zeros = 0;
    for (std::size_t i = 0; i <= v.size(); ++i) {
        const bool symbol = i == v.size() ? true : v[i];
        if (!symbol) {
            ++zeros;
            continue;
        }
        if (zeros >= r) return i - r;
        zeros = 0;
    }
    return std::nullopt;
}

BitSeq end_marker(std::size_t r) {
    BitSeq m(r - 1, false);
    m.set(0, true);
    return m;
}

BitSeq forbidden_word(std::size_t r) {
    BitSeq w(r + 1, false);
    w.set(r, true);
    return w;
}

// Undo `s` replacements on v_s. Returns v_0 or the reason the chain broke.
std::optional<BitSeq> undo_replacements(BitSeq v, std::size_t s, std::size_t r, std::string& why) {
    const BitSeq marker = end_marker(r);
    const BitSeq word = forbidden_word(r);
    for (std::size_t step = s; step >= 1; --step) {
        const std::size_t len = v.size();
        if (len >= r) {
            const std::uint64_t c = le_decode(v.slice(len - r, r));
            // regular step: the pointer names a start p with p + r <= |v_{step-1}| = len + 1
            if (c >= 4 && c - 3 + r <= len + 1) {
                const std::size_t p = static_cast<std::size_t>(c - 3);
                v.erase(len - r, r);
                v.insert(p - 1, word);
                continue;
            }
        }
        if (len >= r - 1 && v.slice(len - (r - 1), r - 1) == marker) {
            v.erase(len - (r - 1), r - 1);
            v.append_run(false, r);
            continue;
        }
        why = "undo step " + std::to_string(step) + " of " + std::to_string(s) +
              ": tail is neither a valid pointer nor the end marker";
        return std::nullopt;
    }
    return v;
}

}  // namespace

FrontParams::FrontParams(std::size_t k, std::size_t r) : k_(k), r_(r) {
    if (r < 2) {
        throw ValidationError(Constraint::front_run_length_too_small,
                              "front-end needs r >= 2, got r=" + std::to_string(r));
    }
    if (k < 2) {
        throw ValidationError(Constraint::front_length_too_small,
                              "front-end needs k >= 2, got k=" + std::to_string(k));
    }
    if (r < kUnboundedRun) {
        const std::size_t bound = (std::size_t{1} << r) + r - 5;
        if (k > bound) {
            throw ValidationError(Constraint::front_length_exceeds_bound,
                                  "k=" + std::to_string(k) + " exceeds 2^r + r - 5 = " +
                                      std::to_string(bound) + " for r=" + std::to_string(r));
        }
        if (k > max_length(r)) {
            throw ValidationError(Constraint::front_length_not_injective,
                                  "k=" + std::to_string(k) + " is above " +
                                      std::to_string(max_length(r)) + " for r=" +
                                      std::to_string(r) +
                                      "; the replacement encoder is not injective there");
        }
    }
}

std::size_t FrontParams::max_length(std::size_t r) noexcept {
    if (r < 3) return 0;
    if (r >= kUnboundedRun) return static_cast<std::size_t>(-1);
    const std::size_t top = (std::size_t{1} << r) + r - 5;
    // r = 3, 4: exhaustively injective up to the bound. From r = 5 on, the
    // top two lengths let a pointer with its high r-2 bits set alias 1·omega.
    return r <= 4 ? top : top - 2;
}

BitSeq omega(std::size_t s, std::size_t t) {
    if (t < 2) throw RangeError("omega: t must be >= 2, got " + std::to_string(t));
    const std::size_t v = s / (t + 1);
    BitSeq out(s - (t + 1) * v, false);
    for (std::size_t j = 0; j < v; ++j) {
        out.append_run(true, t);
        out.push_back(false);
    }
    return out;
}

WiEncoding wi_encode_traced(const BitSeq& u, const FrontParams& fp) {
    const std::size_t k = fp.k();
    const std::size_t r = fp.r();
    if (u.size() != k - 1) {
        throw DataError("wi_encode: message has length " + std::to_string(u.size()) +
                        ", expected k-1 = " + std::to_string(k - 1));
    }
    BitSeq v = u;
    std::size_t s = 0;
    while (const auto start = find_forbidden(v, r)) {
        const std::size_t p = *start + 1;
        if (*start + r < v.size()) {
            v.erase(*start, r + 1);
            v.append(le_encode(p + 3, r));
        } else {
            v.erase(*start, r);
            v.append(end_marker(r));
        }
        if (++s > k) {
            throw InvariantError("wi_encode: replacement loop overran " + params_tag(fp));
        }
    }
    v.push_back(true);
    v.append(omega(s, r - 1));
    if (v.size() != k) {
        throw InvariantError("wi_encode: produced length " + std::to_string(v.size()) + " for " +
                             params_tag(fp));
    }
    return {std::move(v), s};
}

BitSeq wi_encode(const BitSeq& u, const FrontParams& fp) { return wi_encode_traced(u, fp).codeword; }

BitSeq wi_decode(const BitSeq& x, const FrontParams& fp) {
    const std::size_t k = fp.k();
    const std::size_t r = fp.r();
    if (x.size() != k) {
        throw DataError("wi_decode: word has length " + std::to_string(x.size()) +
                        ", expected k = " + std::to_string(k));
    }
    if (!is_zero_constrained(x, r)) {
        throw DataError("wi_decode: word contains a run of " + std::to_string(r) + " zeros");
    }

    // Every s whose suffix reads 1·omega(s) is a candidate; only re-encoding
    // tells the true one apart once s >= r.
    std::vector<BitSeq> found;
    std::string why = "no sentinel found";
    for (std::size_t s = 0; s < k; ++s) {
        if (!x[k - s - 1] || x.slice(k - s, s) != omega(s, r - 1)) continue;
        std::string reason;
        auto u = undo_replacements(x.slice(0, k - s - 1), s, r, reason);
        if (!u) {
            why = reason;
            continue;
        }
        if (wi_encode(*u, fp) != x) {
            why = "candidate with " + std::to_string(s) + " replacements does not re-encode";
            continue;
        }
        found.push_back(std::move(*u));
    }
    if (found.empty()) throw DataError("wi_decode: " + why);
    if (found.size() > 1) {
        throw InvariantError("wi_decode: " + std::to_string(found.size()) +
                             " messages share one codeword for " + params_tag(fp));
    }
    return std::move(found.front());
}

BitSeq nrzi_encode(const BitSeq& x) {
    BitSeq y(x.size());
    bool level = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        level = i == 0 ? x[0] : (level != x[i]);
        y.set(i, level);
    }
    return y;
}

BitSeq nrzi_decode(const BitSeq& y) {
    BitSeq x(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) x.set(i, i == 0 ? y[0] : (y[i - 1] != y[i]));
    return x;
}

BitSeq front_encode(const BitSeq& u, const FrontParams& fp) { return nrzi_encode(wi_encode(u, fp)); }

BitSeq front_decode(const BitSeq& y, const FrontParams& fp) {
    if (y.size() != fp.k()) {
        throw DataError("front_decode: word has length " + std::to_string(y.size()) +
                        ", expected k = " + std::to_string(fp.k()));
    }
    return wi_decode(nrzi_decode(y), fp);
}

}  // namespace rllsidc
