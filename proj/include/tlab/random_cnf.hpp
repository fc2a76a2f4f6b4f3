#pragma once

// Random monotone CNFs for differential and property testing.

#include <optional>
#include <random>
#include <vector>

#include "tlab/cnf.hpp"

namespace tlab {

// Mostly 3-clauses; a quarter of the instances get a few 2-clauses and a
// tenth get one unit clause.
inline MonotoneCnf random_cnf(std::mt19937_64& rng, int min_n, int max_n) {
    const int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
    const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(3 * n));
    const int twos = rng() % 4 == 0 ? static_cast<int>(rng() % 5) : 0;
    const int ones = rng() % 10 == 0 ? 1 : 0;
    std::vector<VarSet> cs;
    for (int i = 0; i < m; ++i) {
        const int w = std::min(n, i < ones ? 1 : i < ones + twos ? 2 : 3);
        VarSet c = 0;
        while (set_size(c) < w) c |= bit(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
        cs.push_back(c);
    }
    return normalize(MonotoneCnf::make(n, cs));
}

// Adds random 2- and 3-clauses until tau reaches t; tau grows by at most one
// per clause, so the result has tau == t exactly, or nullopt if the clause
// budget runs out first.
inline std::optional<MonotoneCnf> random_threshold_cnf(std::mt19937_64& rng, int n, int t, int two_percent = 10) {
    if (t < 0 || t > n - 2) return std::nullopt;
    std::vector<VarSet> cs;
    MonotoneCnf f = MonotoneCnf::make(n, {});
    for (int guard = 0; guard < 40 * n; ++guard) {
        if (transversal_number(f) == t) return f;
        const int w = static_cast<int>(rng() % 100) < two_percent ? 2 : 3;
        VarSet c = 0;
        while (set_size(c) < w) c |= bit(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
        cs.push_back(c);
        f = normalize(MonotoneCnf::make(n, cs));
    }
    return transversal_number(f) == t ? std::optional<MonotoneCnf>(f) : std::nullopt;
}

} // namespace tlab
