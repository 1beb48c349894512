#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "frozen.hpp"
#include "rllsidc/analysis.hpp"
#include "rllsidc/errors.hpp"

using namespace rllsidc;

TEST(Bounds, Values) {
    EXPECT_EQ(g_bound(4), 3u);
    EXPECT_EQ(h_bound(4), 15u);
    EXPECT_THROW((void)g_bound(2), RangeError);
    EXPECT_THROW((void)h_bound(2), RangeError);
}

TEST(Bounds, Difference) {
    for (std::size_t r = 3; r <= 20; ++r) {
        const std::int64_t diff = std::int64_t(h_bound(r)) - std::int64_t(g_bound(r));
        EXPECT_EQ(diff, 7 * (std::int64_t{1} << (r - 3)) + std::int64_t(r) - 6);
        EXPECT_GT(diff, 0);
    }
}

TEST(Phi, Values) {
    EXPECT_DOUBLE_EQ(phi(2), 1.0);
    EXPECT_NEAR(phi(14), 3.7006, 5e-4);
    EXPECT_THROW((void)phi(1), RangeError);
    EXPECT_NEAR(phi(5000), std::log2(4999.0), 1e-12);
}

TEST(Phi, Monotone) {
    for (std::size_t n = 14; n < 1000; ++n) EXPECT_GT(phi(n + 1), phi(n)) << n;
    for (std::size_t n = 14; n <= 64; ++n) EXPECT_GT(psi(n), 0.0) << n;
}

TEST(RedundancyRow, Values) {
    const AnalysisRow r14 = redundancy_row(14);
    EXPECT_EQ(r14.r_hat, 4u);
    EXPECT_EQ(r14.redundancy, 8u);
    EXPECT_NEAR(r14.gap, 4.2994, 1e-3);
    EXPECT_EQ(redundancy_row(21).r_hat, 4u);
    EXPECT_EQ(redundancy_row(22).r_hat, 5u);
    EXPECT_THROW((void)redundancy_row(13), RangeError);
    for (std::size_t n = 14; n <= 1024; ++n) {
        const AnalysisRow row = redundancy_row(n);
        ASSERT_LT(row.gap, 5.0) << n;
        ASSERT_EQ(row.redundancy, row.r_hat + 4);
        ASSERT_DOUBLE_EQ(row.gap, row.redundancy - row.phi);
    }
}

TEST(Rho, ForbiddenWordValues) {
    const std::size_t r_hat = 4;
    EXPECT_EQ(rho(r_hat, 6, BitSeq::parse("0000000")), 0u);
    EXPECT_EQ(rho(r_hat, 6, BitSeq::parse("1000000")), 1u);
    EXPECT_EQ(rho(r_hat, 6, BitSeq::parse("0100000")), 2u);
    EXPECT_EQ(rho(r_hat, 6, BitSeq::parse("1100000")), 3u);
    EXPECT_EQ(rho(r_hat, 6, BitSeq::parse("0000010")), 16u);
    EXPECT_EQ(rho(r_hat, 6, BitSeq::parse("1111110")), 31u);
    EXPECT_EQ(rho(r_hat, 6, BitSeq::parse("0111110")), 30u);
    EXPECT_EQ(rho(r_hat, 6, BitSeq::parse("1111100")), 15u);
    EXPECT_EQ(rho(r_hat, 6, BitSeq::parse("0001000")), 0u);
    EXPECT_THROW((void)rho(r_hat, 6, BitSeq(6)), DataError);
}

TEST(ForbiddenParities, RhatFourListing) {
    const auto words = forbidden_parities(4, false);
    std::vector<std::string> got;
    for (const BitSeq& p : words) got.push_back(p.to_string());
    std::vector<std::string> table{"0000000", "1000000", "0100000", "1100000", "0000010",
                                   "1111110", "0111110", "1111100"};
    std::sort(table.begin(), table.end());
    EXPECT_EQ(got, table);
    EXPECT_EQ(words.size(), test::frozen_u64("forbidden_4_0"));
    EXPECT_EQ(forbidden_parities(4, true).size(), test::frozen_u64("forbidden_4_1"));
    EXPECT_EQ(forbidden_parities(5, false).size(), test::frozen_u64("forbidden_5_0"));
    EXPECT_EQ(forbidden_parities(5, true).size(), test::frozen_u64("forbidden_5_1"));
}

TEST(ForbiddenParities, SplitByMiddleSymbol) {
    for (std::size_t r_hat = 4; r_hat <= 10; ++r_hat)
        for (bool last : {false, true})
            for (const BitSeq& p : forbidden_parities(r_hat, last)) {
                // find the long run
                std::size_t run = 1, best = 1;
                bool sym = p[0], best_sym = p[0];
                for (std::size_t i = 1; i < p.size(); ++i) {
                    run = p[i] == sym ? run + 1 : 1;
                    sym = p[i];
                    if (run > best) best = run, best_sym = sym;
                }
                EXPECT_EQ(p[r_hat - 1], best_sym) << p;
            }
}

TEST(GapCondition, RhatFour) {
    const GapReport g = gap_condition_check(4);
    EXPECT_EQ(g.c1, (Interval{4, 6}));
    EXPECT_EQ(g.c2, (Interval{17, 22}));
    EXPECT_EQ(g.c3, (Interval{32, 38}));
    EXPECT_EQ(g.d, (Interval{25, 32}));
    ASSERT_EQ(g.collisions.size(), 1u);
    EXPECT_EQ(g.collisions[0], (GapCollision{14, 5, 32}));
    EXPECT_FALSE(g.disjoint);
    EXPECT_EQ(interval_chain(g), IntervalChain::boundary_equal);
    const CheckReport rep = to_check_report(g);
    EXPECT_TRUE(rep.pass);
    EXPECT_NE(rep.summary_line().find("colliding=(14,5,32)"), std::string::npos);
}

TEST(GapCondition, LargerRhat) {
    for (std::size_t r_hat = 5; r_hat <= 10; ++r_hat) {
        const GapReport g = gap_condition_check(r_hat);
        EXPECT_TRUE(g.disjoint) << r_hat;
        EXPECT_EQ(interval_chain(g), IntervalChain::strict) << r_hat;
        const std::int64_t P = std::int64_t{1} << r_hat;
        EXPECT_EQ(g.c1, (Interval{P / 4, P / 2 - 2}));
        EXPECT_EQ(g.c2, (Interval{5 * P / 4 - 3, 3 * P / 2 - 2}));
        EXPECT_EQ(g.c3, (Interval{9 * P / 4 - 4, 5 * P / 2 - 2}));
        EXPECT_EQ(g.d, (Interval{3 * P / 2 + 1, 2 * P}));
    }
    EXPECT_THROW((void)gap_condition_check(3), RangeError);
    EXPECT_THROW((void)gap_condition_check(13), RangeError);
}

TEST(GapCondition, AgreesWithEncoder) {
    // the only collision is the triple whose encoder output really breaks
    const CheckReport bad = check_encoder_rll(14, 4, 5, {5000, 2});
    EXPECT_FALSE(bad.pass);
    for (std::uint64_t d : {6, 7}) EXPECT_TRUE(check_encoder_rll(14, 4, d, {5000, 2}).pass);
    for (std::uint64_t d : {5, 6, 7}) EXPECT_TRUE(check_encoder_rll(13, 4, d, {5000, 2}).pass);
}

TEST(Csv, Format) {
    EXPECT_EQ(emit_csv({}), "n,r_hat,redundancy,phi,gap\n");
    EXPECT_EQ(emit_csv({redundancy_row(14)}), "n,r_hat,redundancy,phi,gap\n" + test::frozen("csv_row_14") + "\n");
    EXPECT_EQ(emit_csv({redundancy_row(100)}), "n,r_hat,redundancy,phi,gap\n" + test::frozen("csv_row_100") + "\n");
    std::vector<AnalysisRow> rows;
    for (std::size_t n = 14; n <= 100; ++n) rows.push_back(redundancy_row(n));
    const std::string csv = emit_csv(rows);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 88);
    EXPECT_EQ(csv.find('\r'), std::string::npos);
}
