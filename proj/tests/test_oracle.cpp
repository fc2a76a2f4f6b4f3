#include <algorithm>
#include <numeric>
#include <random>

#include "test_util.hpp"
#include "tlab/constructions.hpp"
#include "tlab/oracle.hpp"
#include "tlab/random_cnf.hpp"

using namespace tlab;

TEST(ExtremalSearch, SmallValues) {
    EXPECT_EQ(extremal_search(5, 2).max_count, 7u);
    EXPECT_EQ(extremal_search(6, 3).max_count, 14u);
    EXPECT_EQ(extremal_search(4, 2).max_count, 6u);
    EXPECT_EQ(extremal_search(6, 2).max_count, 9u);
    EXPECT_EQ(extremal_search(5, 3).max_count, 10u);
    EXPECT_EQ(extremal_search(6, 4).max_count, 15u);
}

TEST(ExtremalSearch, Trivial) {
    EXPECT_EQ(extremal_search(3, 1).max_count, 3u);
    EXPECT_EQ(extremal_search(4, 1).max_count, 3u);
    // 3-clauses on 5 variables cannot force tau = 4
    EXPECT_EQ(extremal_search(5, 4).max_count, 0u);
}

TEST(ExtremalSearch, MixedWidth) {
    const std::uint64_t want[] = {0, 3, 7, 10, 5, 1};
    for (int t = 1; t <= 5; ++t) EXPECT_EQ(extremal_search(5, t, true).max_count, want[t]) << "t=" << t;
    for (int t = 1; t <= 3; ++t) EXPECT_EQ(extremal_search(5, t, true).max_count, extremal_search(5, t).max_count);
}

TEST(ExtremalSearch, Errors) {
    EXPECT_ERRC(extremal_search(7, 3), Errc::TooLarge);
    EXPECT_ERRC(extremal_search(6, 3, true), Errc::TooLarge);
    EXPECT_ERRC(extremal_search(5, 0), Errc::InvalidSpec);
    EXPECT_ERRC(extremal_search(5, 6), Errc::InvalidSpec);
}

TEST(ExtremalSearch, JobsAgree) {
    const auto a = extremal_search(6, 3, false, 1);
    const auto b = extremal_search(6, 3, false, 3);
    EXPECT_EQ(a.max_count, b.max_count);
    EXPECT_EQ(a.argmax_total, b.argmax_total);
}

TEST(ExtremalSearch, ArgmaxInvariants) {
    for (auto [n, t] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 3}, {6, 2}, {6, 3}}) {
        const auto r = extremal_search(n, t);
        ASSERT_FALSE(r.argmax.empty());
        EXPECT_GE(r.argmax_total, r.argmax.size());
        EXPECT_LE(r.argmax.size(), kArgmaxCap);
        for (const auto& f : r.argmax) {
            EXPECT_EQ(f.n, n);
            EXPECT_TRUE(verify_construction(f, t, r.max_count)) << to_mcnf(f);
        }
    }
}

// Relabelling variables maps argmax families to argmax families.
TEST(ExtremalSearch, RelabelSymmetry) {
    std::mt19937_64 rng(41);
    const auto r = extremal_search(6, 3);
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& f : r.argmax) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<VarSet> cs;
        for (VarSet c : f.clauses) {
            VarSet d = 0;
            for_each_member(c, [&](int v) { d |= bit(perm[v]); });
            cs.push_back(d);
        }
        EXPECT_TRUE(verify_construction(MonotoneCnf::make(6, cs), 3, r.max_count));
    }
    // T6 and every relabelling of it are extremal
    EXPECT_TRUE(verify_construction(turan3(6), 3, r.max_count));
}

TEST(VerifyConstruction, Examples) {
    EXPECT_TRUE(verify_construction(turan3(7), 4, 23));
    EXPECT_TRUE(verify_construction(disjoint_sum({clique(2, 2), clique(3, 3)}), 2, 6));
    EXPECT_TRUE(verify_construction(repeat(clique(2, 2), 2), 2, 4));
    EXPECT_FALSE(verify_construction(turan3(7), 4, 22));
    EXPECT_FALSE(verify_construction(turan3(7), 3, 23));
}

// Seven variables, tau 3: at most 18 minimum transversals, attained by K33 + K43.
TEST(SevenThree, ExtremalFamilyAndRandomSample) {
    const auto best = build_family({FormulaType::T0, 2, 3});
    EXPECT_EQ(best.n, 7);
    EXPECT_TRUE(verify_construction(best, 3, 18));
    std::mt19937_64 rng(42);
    int sampled = 0;
    for (int it = 0; it < 3000; ++it) {
        const auto f = random_threshold_cnf(rng, 7, 3, 0);
        if (!f) continue;
        ++sampled;
        EXPECT_LE(count_transversals(*f, 3), 18u) << to_mcnf(*f);
    }
    EXPECT_GT(sampled, 1000);
}
