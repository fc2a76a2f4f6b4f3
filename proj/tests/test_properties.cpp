#include <bit>
#include <random>

#include "test_util.hpp"
#include "tlab/bounds.hpp"
#include "tlab/classify.hpp"
#include "tlab/constructions.hpp"
#include "tlab/enumerate.hpp"
#include "tlab/oracle.hpp"
#include "tlab/random_cnf.hpp"
#include "tlab/spec_parse.hpp"

using namespace tlab;

TEST(Properties, McnfRoundTripThenEnumerate) {
    std::mt19937_64 rng(51);
    for (int it = 0; it < 300; ++it) {
        const auto f = normalize(random_cnf(rng, 3, 11));
        const auto g = normalize(parse_mcnf(to_mcnf(f)));
        ASSERT_EQ(to_mcnf(f), to_mcnf(g));
        const int tau = transversal_number(g);
        EXPECT_EQ(enumerate_min_transversals(g, tau).transversals.members, brute_force_transversals(f, tau).members);
    }
}

TEST(Properties, FamiliesAttainTheirCount) {
    for (FormulaType type : {FormulaType::T0, FormulaType::T1, FormulaType::T2o, FormulaType::T2d})
        for (int t = 1; t <= 5; ++t)
            for (int s = -1; s <= 2 * t; ++s) {
                const FamilySpec spec{type, s, t};
                if (detail::pick_recipe(spec) == detail::Recipe::None) continue;
                SCOPED_TRACE(std::string(type_name(type)) + " s=" + std::to_string(s) + " t=" + std::to_string(t));
                const auto f = build_family(spec);
                EXPECT_EQ(f.n, family_n(spec));
                ASSERT_EQ(transversal_number(f), t);
                const auto r = enumerate_min_transversals(f, t);
                EXPECT_EQ(Rational(r.transversals.members.size()), expected_count(spec));
                EXPECT_EQ(r.transversals.members.size(), count_transversals(f, t));
            }
}

// Minimum transversals of a disjoint sum are products of the blocks' ones.
TEST(Properties, DisjointSumMultiplies) {
    std::mt19937_64 rng(52);
    for (int it = 0; it < 100; ++it) {
        const auto a = normalize(random_cnf(rng, 3, 6));
        const auto b = normalize(random_cnf(rng, 3, 6));
        const auto sum = disjoint_sum({a, b});
        const int ta = transversal_number(a), tb = transversal_number(b);
        EXPECT_EQ(transversal_number(sum), ta + tb);
        EXPECT_EQ(count_transversals(sum, ta + tb), count_transversals(a, ta) * count_transversals(b, tb));
    }
}

TEST(Properties, SpecSumMatchesBlockCounts) {
    const auto f = parse_spec("2*K(4,3) + T3(5) + K(2,2)");
    EXPECT_EQ(transversal_number(f), 2 + 2 + 2 + 1);
    EXPECT_EQ(count_transversals(f, 7), 6u * 6u * 7u * 2u);
}

// T(n, 4, 3): fewest triples such that every 4-set contains one, by
// exhaustive search over triple families.
static int turan_4_3(int n) {
    std::vector<VarSet> triples, quads;
    for (VarSet x = 0; x < (VarSet{1} << n); ++x) {
        if (set_size(x) == 3) triples.push_back(x);
        if (set_size(x) == 4) quads.push_back(x);
    }
    const std::uint32_t m = static_cast<std::uint32_t>(triples.size());
    int best = static_cast<int>(m);
    for (std::uint32_t fam = 0; fam < (1u << m); ++fam) {
        const int size = std::popcount(fam);
        if (size >= best) continue;
        bool ok = true;
        for (VarSet q : quads) {
            bool hit = false;
            for (std::uint32_t i = 0; i < m && !hit; ++i) hit = (fam >> i & 1u) && (triples[i] & ~q) == 0;
            if (!hit) {
                ok = false;
                break;
            }
        }
        if (ok) best = size;
    }
    return best;
}

TEST(Properties, TuranRelationAgreesWithOracle) {
    for (int n = 4; n <= 6; ++n) {
        const auto theta = extremal_search(n, n - 3).max_count;
        EXPECT_EQ(theta_turan_relation(n, 3, BigInt(theta)), turan_4_3(n)) << "n=" << n;
    }
}

TEST(Properties, ClassifiedFamiliesKeepTheirType) {
    for (FormulaType type : {FormulaType::T0, FormulaType::T1, FormulaType::T2o, FormulaType::T2d})
        for (int t = 2; t <= 4; ++t)
            for (int s = 1; s <= t; ++s) {
                const FamilySpec spec{type, s, t};
                if (detail::pick_recipe(spec) == detail::Recipe::None) continue;
                const auto f = build_family(spec);
                EXPECT_EQ(formula_type(f), type) << type_name(type) << " s=" << s << " t=" << t;
                const auto c = certify_bound(f, t, count_transversals(f, t));
                EXPECT_TRUE(c.ok) << c.note;
            }
}
