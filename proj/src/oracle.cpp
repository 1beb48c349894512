#include "rllsidc/oracle.hpp"

#include <sstream>
#include <unordered_set>

#include "rllsidc/errors.hpp"
#include "rllsidc/rll_front.hpp"

namespace rllsidc {

namespace {

void guard(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap) {
        throw GuardError(std::string(what) + ": length " + std::to_string(n) +
                         " exceeds the exhaustive cap " + std::to_string(cap));
    }
}

// x read with its most significant bit as the first symbol, so counting up
// walks {0,1}^n in lexicographic order
BitSeq lexicographic_word(std::uint64_t x, std::size_t n) {
    BitSeq s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i, (x >> (n - 1 - i)) & 1u);
    return s;
}

std::uint64_t delete_symbol(std::uint64_t w, std::size_t i) {
    const std::uint64_t low = w & ((std::uint64_t{1} << i) - 1);
    return low | ((w >> (i + 1)) << i);
}

}  // namespace

WeightedCode WeightedCode::definition(std::size_t n, std::size_t r_hat, std::uint64_t d, std::uint64_t b) {
    auto a = coefficient_sequence(n, r_hat, d);
    WeightedCode code;
    code.modulus = a.back();
    a.pop_back();
    code.weights = std::move(a);
    if (b >= code.modulus) {
        throw ValidationError(Constraint::b_out_of_range, "b=" + std::to_string(b) + " outside [0, " +
                                                              std::to_string(code.modulus - 1) + "]");
    }
    code.residue = b;
    return code;
}

WeightedCode WeightedCode::from(const CodeParams& cp) {
    WeightedCode code;
    const auto a = cp.coefficients();
    code.weights.assign(a.begin(), a.end() - 1);
    code.modulus = cp.modulus();
    code.residue = cp.b();
    return code;
}

bool WeightedCode::contains(std::uint64_t word) const noexcept {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if ((word >> i) & 1u) sum += weights[i];
    return sum % modulus == residue;
}

std::vector<BitSeq> enumerate_rll(std::size_t n, std::size_t r) {
    guard(n, kEnumerationGuard, "enumerate_rll");
    std::vector<BitSeq> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        BitSeq s = lexicographic_word(x, n);
        if (max_run_length(s) <= r) out.push_back(std::move(s));
    }
    return out;
}

std::vector<BitSeq> enumerate_codewords(const WeightedCode& code) {
    const std::size_t n = code.length();
    guard(n, kEnumerationGuard, "enumerate_codewords");
    std::vector<BitSeq> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        BitSeq s = lexicographic_word(x, n);
        if (code.contains(s.to_word())) out.push_back(std::move(s));
    }
    return out;
}

std::vector<BitSeq> enumerate_codewords(std::size_t n, std::size_t r_hat, std::uint64_t d, std::uint64_t b) {
    guard(n, kEnumerationGuard, "enumerate_codewords");
    return enumerate_codewords(WeightedCode::definition(n, r_hat, d, b));
}

std::vector<BitSeq> enumerate_codewords(const CodeParams& cp) {
    return enumerate_codewords(WeightedCode::from(cp));
}

bool check_sidc(const WeightedCode& code, SidcWitness* witness) {
    const std::size_t n = code.length();
    guard(n, kSidcGuard, "check_sidc");
    if (n == 0) return true;

    // owner[v] = 1 + codeword whose deletion ball first reached v
    std::vector<std::uint64_t> owner(std::size_t{1} << (n - 1), 0);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
        if (!code.contains(w)) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t v = delete_symbol(w, i);
            if (owner[v] == 0) {
                owner[v] = w + 1;
            } else if (owner[v] != w + 1) {
                if (witness) {
                    witness->first = BitSeq::from_word(owner[v] - 1, n);
                    witness->second = BitSeq::from_word(w, n);
                    witness->shared = BitSeq::from_word(v, n - 1);
                }
                return false;
            }
        }
    }
    return true;
}

bool check_sidc(std::size_t n, std::size_t r_hat, std::uint64_t d, std::uint64_t b) {
    guard(n, kSidcGuard, "check_sidc");
    return check_sidc(WeightedCode::definition(n, r_hat, d, b));
}

BitSeq sample_rll(std::size_t n, std::size_t r, SplitMix64& rng) {
    if (n > 62) throw GuardError("sample_rll: length " + std::to_string(n) + " exceeds 62");
    if (r < 1) throw RangeError("sample_rll: r must be >= 1");
    if (n == 0) return {};
    // ways[rem][run]: completions of `rem` more symbols after a run of `run`
    std::vector<std::vector<std::uint64_t>> ways(n, std::vector<std::uint64_t>(r + 2, 0));
    for (std::size_t run = 1; run <= r; ++run) ways[0][run] = 1;
    for (std::size_t rem = 1; rem < n; ++rem)
        for (std::size_t run = 1; run <= r; ++run)
            ways[rem][run] = ways[rem - 1][1] + (run < r ? ways[rem - 1][run + 1] : 0);

    BitSeq s(n);
    bool symbol = rng.coin();
    std::size_t run = 1;
    s.set(0, symbol);
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t rem = n - i;  // symbols still to place, including this one
        const std::uint64_t same = run < r ? ways[rem - 1][run + 1] : 0;
        if (rng.below(ways[rem][run]) < same) {
            ++run;
        } else {
            symbol = !symbol;
            run = 1;
        }
        s.set(i, symbol);
    }
    return s;
}

std::string CheckReport::line() const {
    std::string out = "CHECK " + name + " " + params + (pass ? " PASS" : " FAIL");
    if (!counterexample.empty()) out += " " + counterexample;
    return out;
}

std::string CheckReport::summary_line() const {
    std::ostringstream os;
    os << "name=" << name;
    for (const auto& [key, value] : summary) os << ' ' << key << '=' << value;
    os << " result=" << (pass ? "PASS" : "FAIL");
    return os.str();
}

CheckReport check_sidc_all_residues(std::size_t n, std::size_t r_hat, std::uint64_t d) {
    guard(n, kSidcGuard, "check_sidc");
    CheckReport rep;
    rep.name = "sidc";
    rep.params = "n=" + std::to_string(n) + ",rhat=" + std::to_string(r_hat) + ",d=" + std::to_string(d);
    const auto modulus = WeightedCode::definition(n, r_hat, d, 0).modulus;
    std::uint64_t failing = 0;
    for (std::uint64_t b = 0; b < modulus; ++b) {
        SidcWitness w;
        if (check_sidc(WeightedCode::definition(n, r_hat, d, b), &w)) continue;
        ++failing;
        if (rep.pass) {
            rep.pass = false;
            rep.counterexample = "b=" + std::to_string(b) + ":" + w.first.to_string() + "," +
                                 w.second.to_string() + "->" + w.shared.to_string();
        }
    }
    rep.summary = {{"n", std::to_string(n)},
                   {"rhat", std::to_string(r_hat)},
                   {"d", std::to_string(d)},
                   {"residues", std::to_string(modulus)},
                   {"failing_residues", std::to_string(failing)}};
    return rep;
}

CheckReport check_encoder_rll(std::size_t k, std::size_t r, std::uint64_t d, SamplingPlan plan) {
    const CodeParams base = derive_params(k, r, d, 0, ExcludedTriple::allow);
    const bool excluded = k == 14 && r == 4 && d == 5;
    const bool exhaustive = k <= kEncoderExhaustiveGuard;
    const std::uint64_t M = base.modulus();

    CheckReport rep;
    rep.name = "encoder-rll";
    rep.params = "k=" + std::to_string(k) + ",r=" + std::to_string(r) + ",d=" + std::to_string(d);

    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    auto run_one = [&](const BitSeq& y, std::uint64_t b) {
        const CodeParams cp = base.with_residue(b);
        const BitSeq z = embed_trace(cp, y).codeword;
        ++trials;
        if (is_codeword(cp, z) && is_rll(z, r)) return;
        ++violations;
        if (rep.counterexample.empty())
            rep.counterexample = "y=" + y.to_string() + ",b=" + std::to_string(b) + ",z=" + z.to_string();
    };

    if (exhaustive) {
        for (const BitSeq& y : enumerate_rll(k, r))
            for (std::uint64_t b = 0; b < M; ++b) run_one(y, b);
    } else {
        SplitMix64 rng(plan.seed);
        for (std::uint64_t t = 0; t < plan.trials; ++t) {
            const BitSeq y = sample_rll(k, r, rng);
            run_one(y, rng.below(M));
        }
    }

    rep.pass = violations == 0;
    rep.summary = {{"k", std::to_string(k)},
                   {"r", std::to_string(r)},
                   {"d", std::to_string(d)},
                   {"mode", exhaustive ? "exhaustive" : "sampled"},
                   {"trials", std::to_string(trials)},
                   {"violations", std::to_string(violations)}};
    if (!exhaustive) rep.summary.emplace_back("seed", std::to_string(plan.seed));
    if (excluded) {
        rep.summary.emplace_back("excluded", "1");
        rep.summary.emplace_back("proof_condition", "fails");
        rep.summary.emplace_back("violation_observed", violations > 0 ? "yes" : "no");
    }
    return rep;
}

CheckReport check_front_roundtrip(std::size_t k, std::size_t r) {
    const FrontParams fp(k, r);
    guard(k, kFrontRoundtripGuard, "check_front_roundtrip");

    CheckReport rep;
    rep.name = "front-roundtrip";
    rep.params = "k=" + std::to_string(k) + ",r=" + std::to_string(r);

    std::unordered_set<BitSeq> outputs;
    std::uint64_t failures = 0;
    std::size_t max_replacements = 0;
    const std::uint64_t messages = std::uint64_t{1} << (k - 1);
    for (std::uint64_t x = 0; x < messages; ++x) {
        const BitSeq u = lexicographic_word(x, k - 1);
        std::string problem;
        try {
            const WiEncoding enc = wi_encode_traced(u, fp);
            max_replacements = std::max(max_replacements, enc.replacements);
            if (enc.codeword.size() != k)
                problem = "length";
            else if (!is_zero_constrained(enc.codeword, r))
                problem = "zero-run";
            else if (!outputs.insert(enc.codeword).second)
                problem = "duplicate-output";
            else if (wi_decode(enc.codeword, fp) != u)
                problem = "roundtrip";
        } catch (const std::exception& e) {
            problem = "exception";
        }
        if (problem.empty()) continue;
        ++failures;
        if (rep.counterexample.empty()) rep.counterexample = "u=" + u.to_string() + ":" + problem;
    }
    rep.pass = failures == 0;
    rep.summary = {{"k", std::to_string(k)},
                   {"r", std::to_string(r)},
                   {"messages", std::to_string(messages)},
                   {"max_replacements", std::to_string(max_replacements)},
                   {"failures", std::to_string(failures)}};
    return rep;
}

}  // namespace rllsidc
