#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rllsidc/bitseq.hpp"
#include "rllsidc/oracle.hpp"

namespace rllsidc {

// Longest r-RLL message the Schoeny et al. encoder handles: 2^{r-3} + 1.
std::uint64_t g_bound(std::size_t r);
// Longest message the WI + NRZI front end handles: 2^r + r - 5.
std::uint64_t h_bound(std::size_t r);

// Lower bound on the redundancy of an optimal RLL-SIDC code of length n,
// -log2(1 - 2^{1-n}) + log2(n - 1). RangeError for n < 2.
double phi(std::size_t n);
// 2^n - 2 - 2(n-1) ln 2, the numerator of phi'(n).
double psi(std::size_t n);

struct AnalysisRow {
    std::size_t n = 0;
    std::size_t r_hat = 0;
    std::size_t redundancy = 0;
    double phi = 0.0;
    double gap = 0.0;
};

// r_hat is the smallest value with n <= 2^{r_hat} + r_hat + 1.
// RangeError for n < 14.
AnalysisRow redundancy_row(std::size_t n);

// sum of a_i p_i over parity positions 1..m-1 except r_hat. Since a_{r_hat}
// is the only weight depending on d, the result does not depend on d.
// DataError unless |p| = r_hat + 3.
std::uint64_t rho(std::size_t r_hat, std::uint64_t d, const BitSeq& p);

// All p in {0,1}^{r_hat+3} with p_m = last and a run of length >= r_hat + 1,
// in lexicographic order.
std::vector<BitSeq> forbidden_parities(std::size_t r_hat, bool last);

struct Interval {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    bool operator==(const Interval&) const = default;
};

struct GapCollision {
    std::size_t k = 0;
    std::uint64_t d = 0;
    std::int64_t a = 0;  // A = rho(p1) + d - rho(p0), a multiple of 2^{r_hat} + k + 2
    bool operator==(const GapCollision&) const = default;
};

enum class IntervalChain { strict, boundary_equal, broken };

struct GapReport {
    std::size_t r_hat = 0;
    Interval c1, c2, c3, d;
    bool disjoint = true;
    std::vector<GapCollision> collisions;  // unique (k, d, A), sorted
};

// Sweeps every k with rhat_for(k) = r_hat, every d in the valid range and
// every (p0, p1) pair of forbidden parities with p0_{r_hat} = 0,
// p1_{r_hat} = 1 and the same last symbol. RangeError unless
// 4 <= r_hat <= 12.
GapReport gap_condition_check(std::size_t r_hat);

// 0 < C1 < C2 < D <= C3 < 2D, checked end point by end point.
IntervalChain interval_chain(const GapReport& g);

// PASS iff every collision is a triple that derive_params rejects.
CheckReport to_check_report(const GapReport& g);

// n,r_hat,redundancy,phi,gap with six decimals, LF line endings.
std::string emit_csv(const std::vector<AnalysisRow>& rows);

}  // namespace rllsidc
