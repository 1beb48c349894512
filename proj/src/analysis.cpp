#include "rllsidc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <tuple>

#include "rllsidc/errors.hpp"
#include "rllsidc/sidc_core.hpp"

namespace rllsidc {

namespace {

std::int64_t pow2(std::size_t e) { return std::int64_t{1} << e; }

// Union of [lo(d), hi(d)] over consecutive d; the pieces must chain.
template <typename Lo, typename Hi>
Interval union_over(std::uint64_t d_min, std::uint64_t d_max, Lo lo, Hi hi) {
    Interval u{lo(d_min), hi(d_min)};
    for (std::uint64_t d = d_min + 1; d <= d_max; ++d) {
        const std::int64_t l = lo(d), h = hi(d);
        if (l > u.upper + 1) throw InvariantError("interval union is not contiguous");
        u.lower = std::min(u.lower, l);
        u.upper = std::max(u.upper, h);
    }
    return u;
}

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::uint64_t g_bound(std::size_t r) {
    if (r < 3 || r > 63) throw RangeError("g_bound: r must lie in [3, 63]");
    return (std::uint64_t{1} << (r - 3)) + 1;
}

std::uint64_t h_bound(std::size_t r) {
    if (r < 3 || r > 62) throw RangeError("h_bound: r must lie in [3, 62]");
    return (std::uint64_t{1} << r) + r - 5;
}

double phi(std::size_t n) {
    if (n < 2) throw RangeError("phi: n must be >= 2");
    const double tail = -std::log1p(-std::ldexp(1.0, 1 - static_cast<int>(std::min<std::size_t>(n, 2000))));
    return tail / std::log(2.0) + std::log2(static_cast<double>(n - 1));
}

double psi(std::size_t n) {
    const double x = static_cast<double>(n);
    return std::ldexp(1.0, static_cast<int>(n)) - 2.0 - 2.0 * (x - 1.0) * std::log(2.0);
}

AnalysisRow redundancy_row(std::size_t n) {
    if (n < 14) throw RangeError("redundancy_row: n must be >= 14");
    std::size_t r_hat = 4;
    while (n > (std::size_t{1} << r_hat) + r_hat + 1) ++r_hat;
    AnalysisRow row;
    row.n = n;
    row.r_hat = r_hat;
    row.redundancy = r_hat + 4;
    row.phi = phi(n);
    row.gap = static_cast<double>(row.redundancy) - row.phi;
    return row;
}

std::uint64_t rho(std::size_t r_hat, std::uint64_t /*d*/, const BitSeq& p) {
    if (p.size() != r_hat + 3) {
        throw DataError("rho: parity length " + std::to_string(p.size()) + ", expected " +
                        std::to_string(r_hat + 3));
    }
    std::uint64_t sum = 0;
    for (std::size_t i = 1; i < r_hat; ++i)
        if (p[i - 1]) sum += std::uint64_t{1} << (i - 1);
    if (p[r_hat]) sum += std::uint64_t{1} << (r_hat - 1);
    if (p[r_hat + 1]) sum += std::uint64_t{1} << r_hat;
    return sum;
}

std::vector<BitSeq> forbidden_parities(std::size_t r_hat, bool last) {
    if (r_hat < 4 || r_hat > 20) throw RangeError("forbidden_parities: r_hat must lie in [4, 20]");
    const std::size_t m = r_hat + 3;
    std::vector<BitSeq> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        BitSeq p(m);
        for (std::size_t i = 0; i < m; ++i) p.set(i, (x >> (m - 1 - i)) & 1u);
        if (p[m - 1] == last && max_run_length(p) >= r_hat + 1) out.push_back(std::move(p));
    }
    return out;
}

GapReport gap_condition_check(std::size_t r_hat) {
    if (r_hat < 4 || r_hat > 12) throw RangeError("gap_condition_check: r_hat must lie in [4, 12]");
    GapReport g;
    g.r_hat = r_hat;
    const std::uint64_t d_min = static_cast<std::uint64_t>(pow2(r_hat - 2)) + 1;
    const std::uint64_t d_max = static_cast<std::uint64_t>(pow2(r_hat - 1)) - 1;
    const std::int64_t P = pow2(r_hat);
    const auto sd = [](std::uint64_t d) { return static_cast<std::int64_t>(d); };

    g.c1 = union_over(d_min, d_max, [&](auto d) { return sd(d) - 1; }, [&](auto d) { return sd(d) - 1; });
    g.c2 = union_over(d_min, d_max, [&](auto d) { return sd(d) + P - 4; }, [&](auto d) { return sd(d) + P - 1; });
    g.c3 = union_over(d_min, d_max, [&](auto d) { return sd(d) + 2 * P - 5; },
                      [&](auto d) { return sd(d) + 2 * P - 1; });
    const std::size_t k_min = static_cast<std::size_t>(pow2(r_hat - 1)) - 1;
    const std::size_t k_max = static_cast<std::size_t>(P) - 2;
    g.d = {P + static_cast<std::int64_t>(k_min) + 2, P + static_cast<std::int64_t>(k_max) + 2};

    // A - d depends only on the pair, so collect the distinct differences
    std::set<std::int64_t> diffs;
    for (bool last : {false, true}) {
        std::vector<std::int64_t> zero, one;
        for (const BitSeq& p : forbidden_parities(r_hat, last)) {
            const auto v = static_cast<std::int64_t>(rho(r_hat, 0, p));
            (p[r_hat - 1] ? one : zero).push_back(v);
        }
        for (auto r1 : one)
            for (auto r0 : zero) diffs.insert(r1 - r0);
    }

    std::set<std::tuple<std::size_t, std::uint64_t, std::int64_t>> hits;
    for (std::size_t k = k_min; k <= k_max; ++k) {
        const std::int64_t modulus = P + static_cast<std::int64_t>(k) + 2;
        for (std::uint64_t d = d_min; d <= d_max; ++d)
            for (std::int64_t diff : diffs) {
                const std::int64_t a = diff + sd(d);
                if (positive_mod(a, modulus) == 0) hits.emplace(k, d, a);
            }
    }
    for (const auto& [k, d, a] : hits) g.collisions.push_back({k, d, a});
    g.disjoint = g.collisions.empty();
    return g;
}

IntervalChain interval_chain(const GapReport& g) {
    const bool rest = 0 < g.c1.lower && g.c1.lower <= g.c1.upper && g.c1.upper < g.c2.lower &&
                      g.c2.lower <= g.c2.upper && g.c2.upper < g.d.lower && g.d.lower <= g.d.upper &&
                      g.c3.lower <= g.c3.upper && g.c3.upper < 2 * g.d.lower;
    if (!rest || g.d.upper > g.c3.lower) return IntervalChain::broken;
    return g.d.upper == g.c3.lower ? IntervalChain::boundary_equal : IntervalChain::strict;
}

CheckReport to_check_report(const GapReport& g) {
    CheckReport rep;
    rep.name = "gap-condition";
    rep.params = "rhat=" + std::to_string(g.r_hat);
    std::string listed;
    for (const GapCollision& c : g.collisions) {
        bool excluded = false;
        try {
            derive_params(c.k, g.r_hat, c.d);
        } catch (const ValidationError& e) {
            excluded = e.constraint() == Constraint::excluded_triple;
        }
        const std::string item = "(" + std::to_string(c.k) + "," + std::to_string(c.d) + "," + std::to_string(c.a) + ")";
        listed += (listed.empty() ? "" : ";") + item;
        if (!excluded && rep.pass) {
            rep.pass = false;
            rep.counterexample = "unexcluded_collision=" + item;
        }
    }
    const auto iv = [](const Interval& i) { return "[" + std::to_string(i.lower) + "," + std::to_string(i.upper) + "]"; };
    const IntervalChain chain = interval_chain(g);
    if (chain == IntervalChain::broken && rep.pass) {
        rep.pass = false;
        rep.counterexample = "interval_chain=broken";
    }
    rep.summary = {{"rhat", std::to_string(g.r_hat)},
                   {"C1", iv(g.c1)},
                   {"C2", iv(g.c2)},
                   {"D", iv(g.d)},
                   {"C3", iv(g.c3)},
                   {"chain", chain == IntervalChain::strict ? "strict"
                             : chain == IntervalChain::boundary_equal ? "boundary_equal"
                                                                      : "broken"},
                   {"collisions", std::to_string(g.collisions.size())}};
    if (!g.collisions.empty()) {
        rep.summary.emplace_back("colliding", listed);
        rep.summary.emplace_back("proof_condition", "fails");
    }
    return rep;
}

std::string emit_csv(const std::vector<AnalysisRow>& rows) {
    std::string out = "n,r_hat,redundancy,phi,gap\n";
    char buf[128];
    for (const AnalysisRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.6f,%.6f\n", r.n, r.r_hat, r.redundancy, r.phi, r.gap);
        out += buf;
    }
    return out;
}

}  // namespace rllsidc
