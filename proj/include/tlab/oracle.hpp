#pragma once

// Exhaustive extremal search over all clause families on at most six variables.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <thread>
#include <vector>

#include "tlab/cnf.hpp"
#include "tlab/error.hpp"

namespace tlab {

struct SearchResult {
    int n = 0, t = 0;
    bool mixed = false;
    std::uint64_t max_count = 0;
    std::uint64_t argmax_total = 0;  // how many families attain max_count
    std::vector<MonotoneCnf> argmax; // first few, in search order
    double elapsed_ms = 0;
};

inline constexpr std::size_t kArgmaxCap = 32;

namespace detail {

struct SearchSpace {
    std::vector<VarSet> clauses;         // candidate clauses
    std::vector<std::uint32_t> hit_t;    // per t-subset: mask of clauses it hits
    std::vector<std::uint32_t> hit_tm1;  // per (t-1)-subset
    std::vector<std::uint32_t> conflict; // per clause: comparable clauses (mixed mode)
};

inline std::vector<VarSet> subsets_of_size(int n, int k) {
    std::vector<VarSet> out;
    if (k < 0 || k > n) return out;
    for (VarSet s = 0; s < bit(n); ++s)
        if (set_size(s) == k) out.push_back(s);
    sort_lex(out);
    return out;
}

inline std::vector<std::uint32_t> hit_masks(const std::vector<VarSet>& clauses, const std::vector<VarSet>& sets) {
    std::vector<std::uint32_t> out;
    for (VarSet s : sets) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < clauses.size(); ++i)
            if (clauses[i] & s) m |= 1u << i;
        out.push_back(m);
    }
    return out;
}

inline std::uint64_t family_count(const SearchSpace& sp, std::uint32_t fam) {
    for (std::uint32_t h : sp.hit_tm1)
        if ((h & fam) == fam) return 0; // tau < t
    std::uint64_t k = 0;
    for (std::uint32_t h : sp.hit_t) k += (h & fam) == fam;
    return k;
}

inline MonotoneCnf family_cnf(const SearchSpace& sp, int n, std::uint32_t fam) {
    std::vector<VarSet> cs;
    for (std::size_t i = 0; i < sp.clauses.size(); ++i)
        if (fam >> i & 1) cs.push_back(sp.clauses[i]);
    return normalize(MonotoneCnf::make(n, cs));
}

struct Best {
    std::uint64_t count = 0, ties = 0;
    std::vector<std::uint32_t> fams;
    void offer(std::uint64_t c, std::uint32_t fam) {
        if (c == 0 || c < count) return;
        if (c > count) {
            count = c;
            ties = 0;
            fams.clear();
        }
        ++ties;
        if (fams.size() < kArgmaxCap) fams.push_back(fam);
    }
};

// Antichains only: clause i is skipped when it is comparable to a chosen one.
inline void antichains(const SearchSpace& sp, std::size_t i, std::uint32_t fam, std::uint32_t blocked, Best& best) {
    if (i == sp.clauses.size()) {
        best.offer(family_count(sp, fam), fam);
        return;
    }
    antichains(sp, i + 1, fam, blocked, best);
    if (!(blocked >> i & 1)) antichains(sp, i + 1, fam | (1u << i), blocked | sp.conflict[i], best);
}

} // namespace detail

// Theta(n, t, 3) by exhaustion: 3-uniform families by default, all antichains
// of 1-, 2- and 3-clauses when `mixed` (n <= 5).
inline SearchResult extremal_search(int n, int t, bool mixed = false, int jobs = 1) {
    if (n > 6) throw Error(Errc::TooLarge, "exhaustive search needs n <= 6");
    if (mixed && n > 5) throw Error(Errc::TooLarge, "mixed-width search needs n <= 5");
    if (n < 1 || t < 1 || t > n) throw Error(Errc::InvalidSpec, "need 1 <= t <= n");
    const auto start = std::chrono::steady_clock::now();
    detail::SearchSpace sp;
    for (int w = mixed ? 1 : 3; w <= 3; ++w)
        for (VarSet c : detail::subsets_of_size(n, w)) sp.clauses.push_back(c);
    sp.hit_t = detail::hit_masks(sp.clauses, detail::subsets_of_size(n, t));
    sp.hit_tm1 = detail::hit_masks(sp.clauses, detail::subsets_of_size(n, t - 1));
    const std::size_t m = sp.clauses.size();

    std::vector<detail::Best> parts;
    if (mixed) {
        sp.conflict.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const VarSet a = sp.clauses[i], b = sp.clauses[j];
                if (i != j && ((a & b) == a || (a & b) == b)) sp.conflict[i] |= 1u << j;
            }
        parts.resize(1);
        detail::antichains(sp, 0, 0, 0, parts[0]);
    } else {
        jobs = std::max(1, jobs);
        parts.resize(jobs);
        const std::uint64_t total = std::uint64_t{1} << m;
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t fam = w; fam < total; fam += jobs)
                    parts[w].offer(detail::family_count(sp, static_cast<std::uint32_t>(fam)),
                                   static_cast<std::uint32_t>(fam));
            });
        for (auto& th : pool) th.join();
    }
    // merge in family order so the argmax list is schedule-independent
    std::uint64_t best = 0, ties = 0;
    for (const auto& p : parts) best = std::max(best, p.count);
    std::vector<std::uint32_t> fams;
    for (const auto& p : parts)
        if (p.count == best) {
            ties += p.ties;
            fams.insert(fams.end(), p.fams.begin(), p.fams.end());
        }
    std::sort(fams.begin(), fams.end());

    SearchResult r;
    r.n = n;
    r.t = t;
    r.mixed = mixed;
    r.max_count = best;
    r.argmax_total = ties;
    for (std::size_t i = 0; i < fams.size() && i < kArgmaxCap; ++i) r.argmax.push_back(detail::family_cnf(sp, n, fams[i]));
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline bool verify_construction(const MonotoneCnf& f, int expect_t, std::uint64_t expect_count) {
    return transversal_number(f) == expect_t && count_transversals(f, expect_t) == expect_count;
}

} // namespace tlab
