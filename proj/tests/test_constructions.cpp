#include <algorithm>

#include "test_util.hpp"
#include "tlab/bounds.hpp"
#include "tlab/classify.hpp"
#include "tlab/constructions.hpp"

using namespace tlab;
using namespace tlab::test;

namespace {

std::uint64_t count_at_tau(const MonotoneCnf& f) { return count_transversals(f, transversal_number(f)); }

} // namespace

TEST(Blocks, Turan6Clauses) {
    // x0 y0 | x1 y1 | x2 y2 as 0 1 | 2 3 | 4 5
    const auto f = turan3(6);
    EXPECT_EQ(f.clauses.size(), 6u);
    for (VarSet c : {vs({0, 1, 2}), vs({0, 1, 3}), vs({2, 3, 4}), vs({2, 3, 5}), vs({4, 5, 0}), vs({4, 5, 1})})
        EXPECT_NE(std::find(f.clauses.begin(), f.clauses.end(), c), f.clauses.end()) << format_set(c);
}

TEST(Blocks, Clique43) {
    const auto f = build_block(BlockSpec::clique(4, 3));
    EXPECT_EQ(f.clauses.size(), 4u);
    EXPECT_EQ(transversal_number(f), 2);
}

TEST(Blocks, CliqueTauIsLMinusKPlusOne) {
    for (int l = 1; l <= 8; ++l)
        for (int k = 1; k <= std::min(l, 3); ++k) EXPECT_EQ(transversal_number(clique(l, k)), l - k + 1);
}

TEST(Blocks, CliqueDef41) {
    const auto f = build_block(BlockSpec::clique_def(4, Defect::D1));
    EXPECT_EQ(transversal_number(f), 2);
    EXPECT_EQ(count_transversals(f, 2), 5u);
    EXPECT_EQ(formula_type(f), FormulaType::T1);
}

TEST(Blocks, DefectTypes) {
    EXPECT_EQ(formula_type(clique_def(4, Defect::D2o)), FormulaType::T2o);
    EXPECT_EQ(formula_type(clique_def(4, Defect::D2d)), FormulaType::T2d);
    EXPECT_EQ(formula_type(turan_def(7, Defect::D1)), FormulaType::T1);
    EXPECT_EQ(formula_type(turan_def(7, Defect::D2o)), FormulaType::T2o);
    EXPECT_EQ(formula_type(turan_def(7, Defect::D2d)), FormulaType::T2d);
}

TEST(Blocks, Turan5) {
    EXPECT_EQ(to_mcnf(turan3(5)), to_mcnf(t5()));
}

TEST(Blocks, InvalidArguments) {
    EXPECT_ERRC(clique(3, 4), Errc::InvalidSpec);
    EXPECT_ERRC(clique(5, 4), Errc::InvalidSpec);
    EXPECT_ERRC(clique(0, 1), Errc::InvalidSpec);
    EXPECT_ERRC(turan3(2), Errc::InvalidSpec);
    EXPECT_ERRC(clique_def(3, Defect::D2d), Errc::InvalidSpec);
}

TEST(DisjointSum, Examples) {
    const auto k33 = clique(3, 3);
    const auto two = disjoint_sum({k33, k33});
    EXPECT_EQ(transversal_number(two), 2);
    EXPECT_EQ(count_transversals(two, 2), 9u);

    const auto mixed = disjoint_sum({k33, turan3(6)});
    EXPECT_EQ(transversal_number(mixed), 4);
    EXPECT_EQ(count_transversals(mixed, 4), 42u);

    const auto empty = disjoint_sum({});
    EXPECT_EQ(empty.n, 0);
    EXPECT_EQ(transversal_number(empty), 0);
    EXPECT_EQ(count_transversals(empty, 0), 1u);
}

TEST(DisjointSum, TooLarge) {
    EXPECT_ERRC(repeat(clique(3, 3), 22), Errc::CombinedUniverseTooLarge);
}

TEST(DisjointSum, CountsMultiply) {
    const std::vector<MonotoneCnf> blocks = {clique(4, 3), t5(), clique_def(4, Defect::D1), clique(2, 2)};
    const auto f = disjoint_sum(blocks);
    int tau = 0;
    std::uint64_t prod = 1;
    for (const auto& b : blocks) {
        tau += transversal_number(b);
        prod *= count_at_tau(b);
    }
    EXPECT_EQ(transversal_number(f), tau);
    EXPECT_EQ(count_transversals(f, tau), prod);
}

TEST(Family, Examples) {
    const auto p13 = build_family({FormulaType::T0, 1, 3});
    EXPECT_EQ(p13.n, 8);
    EXPECT_EQ(transversal_number(p13), 3);
    EXPECT_EQ(count_transversals(p13, 3), 21u);
    EXPECT_EQ(to_mcnf(p13), to_mcnf(disjoint_sum({clique(3, 3), turan3(5)})));

    const auto p44 = build_family({FormulaType::T0, 4, 4});
    EXPECT_EQ(to_mcnf(p44), to_mcnf(repeat(clique(4, 3), 2)));
    EXPECT_EQ(count_transversals(p44, 4), 36u);

    const auto d45 = build_family({FormulaType::T2d, 4, 5});
    EXPECT_EQ(d45.n, 11);
    EXPECT_EQ(transversal_number(d45), 5);
    EXPECT_EQ(count_transversals(d45, 5), 75u);
    EXPECT_EQ(formula_type(d45), FormulaType::T2d);
}

TEST(Family, ExpectedCountExamples) {
    EXPECT_EQ(expected_count({FormulaType::T0, 0, 2}), 9);
    EXPECT_EQ(expected_count({FormulaType::T0, 1, 2}), 7);
    EXPECT_EQ(expected_count({FormulaType::T2o, 2, 2}), 4);
}

TEST(Family, ThreeTMinusOne) {
    const std::uint64_t want[] = {0, 0, 7, 21, 63};
    for (int t = 2; t <= 4; ++t) {
        const auto f = build_3t_minus_1(t);
        EXPECT_EQ(f.n, 3 * t - 1);
        EXPECT_EQ(transversal_number(f), t);
        EXPECT_EQ(count_transversals(f, t), want[t]);
    }
    EXPECT_ERRC(build_3t_minus_1(1), Errc::InvalidSpec);
}

TEST(Family, TwoConstructionsTie) {
    // K33 + T6 and K43 + T5 both reach 42 on 9 variables with t = 4.
    const auto a = disjoint_sum({clique(3, 3), turan3(6)});
    const auto b = disjoint_sum({clique(4, 3), turan3(5)});
    EXPECT_EQ(a.n, b.n);
    EXPECT_EQ(transversal_number(a), 4);
    EXPECT_EQ(transversal_number(b), 4);
    EXPECT_EQ(count_transversals(a, 4), 42u);
    EXPECT_EQ(count_transversals(b, 4), 42u);
}

TEST(Family, OutsideValidity) {
    EXPECT_ERRC(build_family({FormulaType::T0, 5, 4}), Errc::InvalidSpec);
    EXPECT_ERRC(build_family({FormulaType::T0, 0, 0}), Errc::InvalidSpec);
    EXPECT_ERRC(build_family({FormulaType::T3, 0, 2}), Errc::InvalidSpec);
    EXPECT_ERRC(expected_count({FormulaType::T2d, 1, 1}), Errc::InvalidSpec);
}

// Brute force against the closed form for every family with t <= 6.
TEST(Family, ClosedFormMatchesBruteForce) {
    for (FormulaType type : {FormulaType::T0, FormulaType::T1, FormulaType::T2o, FormulaType::T2d})
        for (int t = 1; t <= 6; ++t)
            for (int s = -1; s <= t; ++s) {
                const FamilySpec spec{type, s, t};
                MonotoneCnf f;
                try {
                    f = build_family(spec);
                } catch (const Error&) {
                    continue;
                }
                SCOPED_TRACE(std::string(type_name(type)) + " s=" + std::to_string(s) + " t=" + std::to_string(t));
                EXPECT_EQ(f.num_vars(), family_n(spec));
                EXPECT_EQ(transversal_number(f), t);
                const Rational want = expected_count(spec);
                EXPECT_EQ(Rational(count_transversals(f, t)), want);
                if (type != FormulaType::T0 && t >= 2 && s >= 1) {
                    EXPECT_EQ(formula_type(f), type);
                }
                if (s >= 0) {
                    EXPECT_LE(want, phi_upper({type, s, t}));
                }
            }
}
