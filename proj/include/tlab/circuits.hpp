#pragma once

// Depth-3 OR-of-3-CNF circuits for threshold functions, covered by permuted
// copies of one seed formula.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "tlab/bounds.hpp"
#include "tlab/cnf.hpp"
#include "tlab/constructions.hpp"
#include "tlab/error.hpp"
#include "tlab/oracle.hpp"
#include "tlab/rational.hpp"

namespace tlab {

struct Sigma3Circuit {
    int n = 0, t = 0;
    std::vector<MonotoneCnf> subcircuits;
    int size() const { return static_cast<int>(subcircuits.size()); }
};

struct CircuitOptions {
    int restarts = 8;
    std::uint64_t seed = 0x5EED;
    int candidates = 32; // permutations scored per greedy step
};

inline MonotoneCnf permute(const MonotoneCnf& f, const std::vector<int>& perm) {
    std::vector<VarSet> cs;
    for (VarSet c : f.clauses) {
        VarSet d = 0;
        for_each_member(c, [&](int v) { d |= bit(perm[v]); });
        cs.push_back(d);
    }
    return normalize(MonotoneCnf::make(f.n, cs));
}

namespace detail {

inline VarSet apply_perm(VarSet s, const std::vector<int>& perm) {
    VarSet d = 0;
    for_each_member(s, [&](int v) { d |= bit(perm[v]); });
    return d;
}

// Colex rank of a k-subset of [0, n).
struct SubsetRanker {
    std::vector<std::vector<std::uint64_t>> c;
    explicit SubsetRanker(int n) : c(n + 1, std::vector<std::uint64_t>(n + 2, 0)) {
        for (int i = 0; i <= n; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
        }
    }
    std::uint64_t rank(VarSet s) const {
        std::uint64_t r = 0;
        int j = 1;
        for_each_member(s, [&](int v) { r += c[v][j++]; });
        return r;
    }
};

inline std::vector<int> random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// A permutation sending seed transversal `from` onto input `to`.
inline std::vector<int> targeted_perm(int n, VarSet from, VarSet to, std::mt19937_64& rng) {
    std::vector<int> src = members(from), dst = members(to);
    std::shuffle(dst.begin(), dst.end(), rng);
    std::vector<int> rest_src, rest_dst;
    for (int v = 0; v < n; ++v) {
        if (!(from & bit(v))) rest_src.push_back(v);
        if (!(to & bit(v))) rest_dst.push_back(v);
    }
    std::shuffle(rest_dst.begin(), rest_dst.end(), rng);
    std::vector<int> p(n);
    for (std::size_t i = 0; i < src.size(); ++i) p[src[i]] = dst[i];
    for (std::size_t i = 0; i < rest_src.size(); ++i) p[rest_src[i]] = rest_dst[i];
    return p;
}

} // namespace detail

inline Sigma3Circuit build_threshold_circuit(int n, int t, const MonotoneCnf& seed, const CircuitOptions& opt = {}) {
    if (seed.n != n) throw Error(Errc::SeedMismatch, "seed has n=" + std::to_string(seed.n) + ", want " + std::to_string(n));
    if (n > 20) throw Error(Errc::TooLarge, "circuits need n <= 20");
    const int tau = transversal_number(seed);
    if (tau != t) throw Error(Errc::SeedMismatch, "seed has tau=" + std::to_string(tau) + ", want " + std::to_string(t));
    MonotoneCnf full_seed = seed;
    full_seed.universe = low_bits(n);
    const std::vector<VarSet> trans = brute_force_transversals(full_seed, t).members;
    const detail::SubsetRanker ranker(n);
    const std::uint64_t layer = ranker.c[n][t];

    std::optional<Sigma3Circuit> best;
    for (int restart = 0; restart < opt.restarts; ++restart) {
        std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(restart));
        std::vector<char> covered(layer, 0);
        std::uint64_t left = layer;
        Sigma3Circuit c;
        c.n = n;
        c.t = t;
        // ascending scan for uncovered inputs
        std::vector<VarSet> inputs = detail::subsets_of_size(n, t);
        std::size_t scan = 0;
        while (left > 0) {
            while (covered[ranker.rank(inputs[scan])]) ++scan;
            std::vector<int> best_perm;
            std::uint64_t best_gain = 0;
            for (int k = 0; k < opt.candidates; ++k) {
                std::vector<int> p;
                if (k % 4 == 3) {
                    p = detail::random_perm(n, rng);
                } else {
                    const VarSet from = trans[rng() % trans.size()];
                    p = detail::targeted_perm(n, from, inputs[scan], rng);
                }
                std::uint64_t gain = 0;
                for (VarSet s : trans) gain += !covered[ranker.rank(detail::apply_perm(s, p))];
                if (gain > best_gain) best_gain = gain, best_perm = std::move(p);
            }
            for (VarSet s : trans) {
                char& cell = covered[ranker.rank(detail::apply_perm(s, best_perm))];
                if (!cell) {
                    cell = 1;
                    --left;
                }
            }
            c.subcircuits.push_back(permute(seed, best_perm));
        }
        if (!best || c.size() < best->size()) best = std::move(c);
    }
    return *best;
}

// Exhaustive: the OR of the subcircuits must accept exactly the inputs of weight >= t.
inline bool verify_circuit(const Sigma3Circuit& c, int jobs = 1) {
    if (c.n > 20) throw Error(Errc::TooLarge, "verify_circuit needs n <= 20");
    const std::uint64_t total = std::uint64_t{1} << c.n;
    std::atomic<bool> ok{true};
    detail::parallel_for(static_cast<std::size_t>(std::max(1, jobs)), jobs, [&](std::size_t w) {
        for (std::uint64_t x = w; x < total && ok; x += static_cast<std::uint64_t>(std::max(1, jobs))) {
            bool acc = false;
            for (const auto& f : c.subcircuits)
                if (is_transversal(f, x)) {
                    acc = true;
                    break;
                }
            if (acc != (set_size(x) >= c.t)) ok = false;
        }
    });
    return ok;
}

// Every subcircuit rejects all inputs of weight < t.
inline bool subcircuits_threshold(const Sigma3Circuit& c) {
    for (const auto& f : c.subcircuits)
        if (transversal_number(f) < c.t) return false;
    return true;
}

struct KnownTheta {
    BigInt value;
    std::string source; // "oracle", "closed_form", "boundary"
};

// Theta(n, t, 3) where it is settled: exhaustive search for n <= 6, the
// closed-form bound attained by the extremal families for t <= n/2, and the
// boundary rows t >= n-2.
inline KnownTheta known_theta(int n, int t) {
    if (n < 1 || t < 0 || t > n) throw Error(Errc::UnknownTheta, "t outside [0, n]");
    static std::map<std::pair<int, int>, BigInt> cache;
    static std::mutex mu;
    if (t == 0) return {1, "boundary"};
    if (t >= n - 2) return {binomial(n, t), "boundary"};
    const int s = 3 * t - n;
    if (s <= 0) return {pow_int(3, t), "closed_form"};
    if (n <= 6) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, t});
        if (it == cache.end()) it = cache.emplace(std::pair{n, t}, BigInt(extremal_search(n, t).max_count)).first;
        return {it->second, "oracle"};
    }
    if (s <= t) return {num(phi_upper({FormulaType::T0, s, t})), "closed_form"};
    throw Error(Errc::UnknownTheta, "Theta(" + std::to_string(n) + "," + std::to_string(t) + ",3) not settled here");
}

// An extremal type-0 family with tau = t, padded to n variables.
inline MonotoneCnf default_seed(int n, int t) {
    if (t < 1 || 2 * t > n) throw Error(Errc::InvalidSpec, "default_seed needs 1 <= t <= n/2");
    const int s = 3 * t - n;
    return pad_to(build_family({FormulaType::T0, s, t}), n);
}

struct SizeBounds {
    BigInt lower;
    int actual = 0;
    std::string theta_source;
};

inline SizeBounds size_bounds(const Sigma3Circuit& c) {
    const KnownTheta th = known_theta(c.n, c.t);
    return {ceil_div(Rational(binomial(c.n, c.t), th.value)), c.size(), th.source};
}

} // namespace tlab
