#include <random>

#include "test_util.hpp"
#include "tlab/classify.hpp"
#include "tlab/constructions.hpp"
#include "tlab/enumerate.hpp"
#include "tlab/random_cnf.hpp"

using namespace tlab;
using namespace tlab::test;

namespace {

std::vector<VarSet> run(const MonotoneCnf& f, int t, EnumMode mode, int jobs = 1) {
    EnumOptions opt;
    opt.mode = mode;
    opt.jobs = jobs;
    const auto r = enumerate_min_transversals(f, t, opt);
    EXPECT_EQ(r.stats.duplicates, 0u);
    return r.transversals.members;
}

void expect_all_modes_agree(const MonotoneCnf& f) {
    const int tau = transversal_number(f);
    const auto brute = brute_force_transversals(f, tau).members;
    EXPECT_EQ(run(f, tau, EnumMode::Structured), brute) << to_mcnf(f);
    EXPECT_EQ(run(f, tau, EnumMode::Generic), brute) << to_mcnf(f);
}

} // namespace

TEST(Enumerate, Examples) {
    const auto p13 = build_family({FormulaType::T0, 1, 3});
    EXPECT_EQ(run(p13, 3, EnumMode::Structured).size(), 21u);
    EXPECT_EQ(run(clique(4, 3), 2, EnumMode::Structured).size(), 6u);
    EXPECT_EQ(run(turan3(6), 3, EnumMode::Structured).size(), 14u);
    for (const auto& f : {p13, clique(4, 3), turan3(6)}) expect_all_modes_agree(f);
}

TEST(Enumerate, TauMismatch) {
    EXPECT_ERRC(enumerate_min_transversals(clique(4, 3), 3), Errc::PreconditionTauMismatch);
    EXPECT_ERRC(enumerate_min_transversals(clique(4, 3), 1), Errc::PreconditionTauMismatch);
}

TEST(Enumerate, EmptyCnf) {
    const auto r = enumerate_min_transversals(MonotoneCnf::make(4, {}), 0);
    EXPECT_EQ(r.transversals.members, std::vector<VarSet>{0});
}

TEST(Enumerate, StructuredModeUsesTables) {
    // T7 at t = 4: s = 5, so the tables apply from the root
    EnumOptions opt;
    opt.mode = EnumMode::Structured;
    const auto r = enumerate_min_transversals(turan3(7), 4, opt);
    EXPECT_EQ(r.transversals.members.size(), 23u);
    EXPECT_GT(r.stats.structured_nodes, 0u);
    EXPECT_FALSE(r.stats.tables.empty());
    EXPECT_EQ(r.stats.duplicates, 0u);
    opt.mode = EnumMode::Generic;
    const auto g = enumerate_min_transversals(turan3(7), 4, opt);
    EXPECT_EQ(g.stats.structured_nodes, 0u);
    EXPECT_EQ(g.transversals.members, r.transversals.members);
}

TEST(Certify, Examples) {
    const auto kk = repeat(clique(4, 3), 2);
    const auto c1 = certify_bound(kk, 4, 36);
    EXPECT_TRUE(c1.checked);
    EXPECT_TRUE(c1.ok);
    EXPECT_EQ(c1.slack, 0);
    EXPECT_TRUE(c1.six_quarter_checked);
    EXPECT_EQ(c1.six_quarter_cmp, 0);

    const auto c2 = certify_bound(t5(), 2, 7);
    EXPECT_TRUE(c2.ok);
    EXPECT_EQ(c2.s, 1);
    EXPECT_EQ(c2.bound, 7);

    const auto c3 = certify_bound(clique(3, 3), 1, 3);
    EXPECT_TRUE(c3.ok);
    EXPECT_EQ(c3.slack, 0);
}

TEST(Certify, Violation) {
    const auto c = certify_bound(t5(), 2, 8);
    EXPECT_FALSE(c.ok);
    EXPECT_EQ(c.slack, -1);
}

TEST(Certify, OutsideValiditySkipsTypeBound) {
    // s = 3 - 9 < 0
    const auto f = pad_to(clique(3, 3), 9);
    const auto c = certify_bound(f, 1, 3);
    EXPECT_FALSE(c.checked);
    EXPECT_TRUE(c.ok);
    EXPECT_FALSE(c.note.empty());
}

TEST(Certify, ThroughEnumerate) {
    EnumOptions opt;
    opt.certify = true;
    const auto r = enumerate_min_transversals(build_family({FormulaType::T0, 0, 2}), 2, opt);
    EXPECT_EQ(r.transversals.members.size(), 9u);
    ASSERT_TRUE(r.stats.cert);
    EXPECT_TRUE(r.stats.cert->ok);
}

TEST(ApplyRule, PairAlwaysTogether) {
    // a, b only ever appear together: the P0_1 variant whose first rows are (-2,-1,-1)
    const auto f = cnf(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    const auto m = find_property(f, FormulaType::T0, false);
    ASSERT_EQ(m.table, "P0_1.a");
    const auto br = apply_rule(f, m);
    ASSERT_EQ(br.size(), 3u);
    const int want[][3] = {{-2, -1, -1}, {-2, -1, -1}, {-5, -3, -4}};
    for (std::size_t k = 0; k < br.size(); ++k) {
        EXPECT_EQ(br[k].row->dn, want[k][0]);
        EXPECT_EQ(br[k].row->dt, want[k][1]);
        EXPECT_EQ(br[k].row->ds, want[k][2]);
        EXPECT_EQ(br[k].cnf.num_vars(), f.num_vars() + br[k].row->dn);
        EXPECT_EQ(-br[k].dt, br[k].row->dt);
    }
}

TEST(ApplyRule, OverlappingTwoClauses) {
    const auto f = cnf(5, {{0, 1}, {0, 2}, {0, 3, 4}});
    const auto m = find_property(f, FormulaType::T2o, false);
    ASSERT_EQ(m.table, "P2o_1");
    const auto br = apply_rule(f, m);
    ASSERT_EQ(br.size(), 2u);
    // a = 1
    EXPECT_EQ(br[0].cnf.num_vars(), 4);
    EXPECT_EQ(br[0].dt, 1);
    EXPECT_TRUE(br[0].cnf.clauses.empty());
    // a = 0 forces b = c = 1
    EXPECT_EQ(br[1].cnf.num_vars(), 2);
    EXPECT_EQ(br[1].dt, 2);
    EXPECT_EQ(br[1].emitted.included, vs({1, 2}));
    EXPECT_EQ(br[1].emitted.excluded, vs({0}));
    EXPECT_EQ(br[1].cnf.clauses, std::vector<VarSet>{vs({3, 4})});
}

TEST(ApplyRule, InfeasibleRowDropped) {
    // P0_1.a row a=0,b=0 empties the 2-clause {a,b}
    const auto f = cnf(5, {{0, 1}, {2, 3, 4}});
    PropertyMatch m;
    m.table = "P0_1.a";
    m.letters = {{"a", 0}, {"b", 1}, {"c", 2}, {"d", 3}, {"e", 4}};
    EXPECT_EQ(apply_rule(f, m).size(), 2u);
}

TEST(EnumerateProperties, Differential) {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 400; ++it) expect_all_modes_agree(normalize(random_cnf(rng, 3, 12)));
}

TEST(EnumerateProperties, DenseDifferential) {
    std::mt19937_64 rng(32);
    int done = 0;
    for (int it = 0; it < 400; ++it) {
        const int n = 6 + static_cast<int>(rng() % 7);
        const int t = n / 3 + 1 + static_cast<int>(rng() % 2);
        const auto f = random_threshold_cnf(rng, n, t, 15);
        if (!f) continue;
        expect_all_modes_agree(*f);
        ++done;
    }
    EXPECT_GT(done, 200);
}

TEST(EnumerateProperties, ParallelMatchesSerial) {
    std::mt19937_64 rng(33);
    for (int it = 0; it < 60; ++it) {
        const auto f = random_threshold_cnf(rng, 12, 6, 10);
        if (!f) continue;
        const auto serial = run(*f, 6, EnumMode::Structured, 1);
        EXPECT_EQ(run(*f, 6, EnumMode::Structured, 3), serial);
        EXPECT_EQ(run(*f, 6, EnumMode::Generic, 2), serial);
    }
}

TEST(EnumerateProperties, OutputsAreMinimumTransversals) {
    std::mt19937_64 rng(34);
    for (int it = 0; it < 200; ++it) {
        const auto f = normalize(random_cnf(rng, 3, 12));
        const int tau = transversal_number(f);
        for (VarSet s : run(f, tau, EnumMode::Structured)) {
            EXPECT_EQ(set_size(s), tau);
            EXPECT_TRUE(is_transversal(f, s));
        }
    }
}
