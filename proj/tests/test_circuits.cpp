#include "test_util.hpp"
#include "tlab/circuits.hpp"
#include "tlab/constructions.hpp"

using namespace tlab;
using namespace tlab::test;

TEST(Circuit, CliqueCoversEveryPair) {
    const auto c = build_threshold_circuit(4, 2, clique(4, 3));
    EXPECT_EQ(c.size(), 1);
    EXPECT_TRUE(verify_circuit(c));
    EXPECT_TRUE(subcircuits_threshold(c));
}

TEST(Circuit, EightFour) {
    const auto c = build_threshold_circuit(8, 4, repeat(clique(4, 3), 2));
    EXPECT_TRUE(verify_circuit(c));
    EXPECT_TRUE(verify_circuit(c, 3));
    const auto sb = size_bounds(c);
    EXPECT_EQ(sb.lower, 2); // ceil(70 / 36)
    EXPECT_GE(c.size(), 2);
    EXPECT_EQ(sb.actual, c.size());
}

TEST(Circuit, FiveTwo) {
    const auto c = build_threshold_circuit(5, 2, t5());
    EXPECT_TRUE(verify_circuit(c));
    EXPECT_EQ(size_bounds(c).lower, 2); // ceil(10 / 7)
    EXPECT_GE(c.size(), 2);
}

TEST(Circuit, MissingCoverageFails) {
    auto c = build_threshold_circuit(8, 4, repeat(clique(4, 3), 2));
    ASSERT_GE(c.size(), 2);
    c.subcircuits.pop_back();
    EXPECT_FALSE(verify_circuit(c));
}

TEST(Circuit, AcceptingBelowThresholdFails) {
    Sigma3Circuit c;
    c.n = 4;
    c.t = 2;
    c.subcircuits = {clique(4, 3), cnf(4, {{0, 1, 2}})};
    EXPECT_FALSE(verify_circuit(c));
    EXPECT_FALSE(subcircuits_threshold(c));
}

TEST(Circuit, SeedMismatch) {
    EXPECT_ERRC(build_threshold_circuit(5, 2, clique(4, 3)), Errc::SeedMismatch);
    EXPECT_ERRC(build_threshold_circuit(4, 3, clique(4, 3)), Errc::SeedMismatch);
}

TEST(SizeBounds, Examples) {
    Sigma3Circuit c;
    c.n = 6;
    c.t = 3;
    EXPECT_EQ(size_bounds(c).lower, 2); // ceil(20 / 14)
    c.n = 5;
    c.t = 2;
    EXPECT_EQ(size_bounds(c).lower, 2);
    const auto k = build_threshold_circuit(3, 1, clique(3, 3));
    EXPECT_EQ(k.size(), 1);
    EXPECT_EQ(size_bounds(k).lower, 1);
    EXPECT_EQ(size_bounds(k).actual, 1);
}

TEST(KnownTheta, Sources) {
    EXPECT_EQ(known_theta(6, 3).value, 14);
    EXPECT_EQ(known_theta(6, 3).source, "oracle");
    EXPECT_EQ(known_theta(8, 4).value, 36);
    EXPECT_EQ(known_theta(8, 4).source, "closed_form");
    EXPECT_EQ(known_theta(9, 2).value, 9);
    EXPECT_EQ(known_theta(9, 7).value, 36);
    EXPECT_EQ(known_theta(9, 7).source, "boundary");
    EXPECT_ERRC(known_theta(9, 6), Errc::UnknownTheta);
    EXPECT_ERRC(known_theta(5, 6), Errc::UnknownTheta);
}

TEST(Circuit, Grid) {
    for (int n = 3; n <= 10; ++n)
        for (int t = 1; 2 * t <= n; ++t) {
            CircuitOptions opt;
            opt.restarts = 2;
            const auto c = build_threshold_circuit(n, t, default_seed(n, t), opt);
            EXPECT_TRUE(verify_circuit(c)) << n << "," << t;
            EXPECT_TRUE(subcircuits_threshold(c));
            const auto sb = size_bounds(c);
            EXPECT_GE(BigInt(c.size()), sb.lower) << n << "," << t;
            EXPECT_LE(BigInt(c.size()), sb.lower * n * n) << n << "," << t;
        }
}
