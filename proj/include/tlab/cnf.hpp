#pragma once

// Monotone CNFs over at most 64 variables. Clauses and variable sets are
// single machine words; bit i is variable i (0-based).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "tlab/error.hpp"

namespace tlab {

using VarSet = std::uint64_t;
inline constexpr int kMaxVars = 64;

constexpr VarSet bit(int v) { return VarSet{1} << v; }
constexpr VarSet low_bits(int n) { return n >= 64 ? ~VarSet{0} : (bit(n) - 1); }
inline int set_size(VarSet s) { return std::popcount(s); }
inline int lowest(VarSet s) { return std::countr_zero(s); }

inline std::vector<int> members(VarSet s) {
    std::vector<int> out;
    out.reserve(std::popcount(s));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

template <class F>
inline void for_each_member(VarSet s, F&& f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

// Lexicographic order on the sorted index lists of two sets.
inline bool lex_less(VarSet a, VarSet b) {
    if (a == b) return false;
    const int i = std::countr_zero(a ^ b);
    const VarSet above = i >= 63 ? 0 : ~low_bits(i + 1);
    if (a & bit(i)) {
        // a has i where b continues with something larger, or b ends here.
        return (b & above) != 0;
    }
    return (a & above) == 0;
}

inline void sort_lex(std::vector<VarSet>& v) { std::sort(v.begin(), v.end(), lex_less); }

// "1 2 3" with 1-based indices.
inline std::string format_set(VarSet s) {
    std::string out;
    for_each_member(s, [&](int v) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v + 1);
    });
    return out;
}

struct PartialAssignment {
    VarSet included = 0;
    VarSet excluded = 0;
    bool consistent() const { return (included & excluded) == 0; }
};

struct MonotoneCnf {
    int n = 0;           // variable indices live in [0, n)
    VarSet universe = 0; // variables still present; all of [0, n) unless restricted
    std::vector<VarSet> clauses;

    static MonotoneCnf make(int n, std::vector<VarSet> clauses) {
        if (n < 0 || n > kMaxVars)
            throw Error(Errc::UniverseTooLarge, "n=" + std::to_string(n) + " exceeds 64");
        MonotoneCnf f;
        f.n = n;
        f.universe = low_bits(n);
        for (VarSet c : clauses) {
            if (c & ~f.universe) throw Error(Errc::InvalidSpec, "clause outside universe");
        }
        f.clauses = std::move(clauses);
        return f;
    }

    int num_vars() const { return std::popcount(universe); }

    VarSet support() const {
        VarSet s = 0;
        for (VarSet c : clauses) s |= c;
        return s;
    }

    int count_width(int w) const {
        int k = 0;
        for (VarSet c : clauses) k += std::popcount(c) == w;
        return k;
    }

    bool operator==(const MonotoneCnf&) const = default;
};

inline bool is_antichain(const std::vector<VarSet>& clauses) {
    for (std::size_t i = 0; i < clauses.size(); ++i)
        for (std::size_t j = 0; j < clauses.size(); ++j)
            if (i != j && (clauses[i] & clauses[j]) == clauses[i]) return false;
    return true;
}

// Drops duplicates and supersets; clauses come out in lexicographic order.
inline std::vector<VarSet> normalize_clauses(std::vector<VarSet> cs) {
    std::sort(cs.begin(), cs.end(), [](VarSet a, VarSet b) {
        const int wa = std::popcount(a), wb = std::popcount(b);
        return wa != wb ? wa < wb : a < b;
    });
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    std::vector<VarSet> kept;
    kept.reserve(cs.size());
    for (VarSet c : cs) {
        bool dominated = false;
        for (VarSet k : kept) {
            if ((k & c) == k) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(c);
    }
    sort_lex(kept);
    return kept;
}

inline MonotoneCnf normalize(const MonotoneCnf& f) {
    MonotoneCnf g = f;
    g.clauses = normalize_clauses(f.clauses);
    return g;
}

// Include: clauses meeting pa.included vanish. Exclude: those variables are
// deleted from clauses. Both sets leave the universe. nullopt means an empty
// clause appeared (dead branch).
inline std::optional<MonotoneCnf> restrict(const MonotoneCnf& f, const PartialAssignment& pa) {
    MonotoneCnf g;
    g.n = f.n;
    g.universe = f.universe & ~(pa.included | pa.excluded);
    g.clauses.reserve(f.clauses.size());
    for (VarSet c : f.clauses) {
        if (c & pa.included) continue;
        const VarSet r = c & ~pa.excluded;
        if (r == 0) return std::nullopt;
        g.clauses.push_back(r);
    }
    g.clauses = normalize_clauses(std::move(g.clauses));
    return g;
}

// Size of a greedily built set of pairwise disjoint clauses; a lower bound on
// the transversal number.
inline int greedy_matching_bound(const std::vector<VarSet>& clauses) {
    VarSet used = 0;
    int k = 0;
    for (VarSet c : clauses) {
        if ((c & used) == 0) {
            used |= c;
            ++k;
        }
    }
    return k;
}

namespace detail {

inline void tau_search(std::vector<VarSet>& scratch, std::size_t begin, std::size_t end, int chosen,
                       int& best) {
    if (begin == end) {
        best = std::min(best, chosen);
        return;
    }
    std::vector<VarSet> live(scratch.begin() + begin, scratch.begin() + end);
    if (chosen + greedy_matching_bound(live) >= best) return;
    const VarSet first = live.front();
    VarSet earlier = 0;
    for_each_member(first, [&](int v) {
        // Branch: v is in the transversal, the earlier members of this clause are not.
        std::vector<VarSet> next;
        next.reserve(live.size());
        bool dead = false;
        for (VarSet c : live) {
            if (c & bit(v)) continue;
            const VarSet r = c & ~earlier;
            if (r == 0) {
                dead = true;
                break;
            }
            next.push_back(r);
        }
        earlier |= bit(v);
        if (dead) return;
        const std::size_t b = scratch.size();
        scratch.insert(scratch.end(), next.begin(), next.end());
        tau_search(scratch, b, scratch.size(), chosen + 1, best);
        scratch.resize(b);
    });
}

} // namespace detail

// Branch-and-bound over the first unhit clause with a greedy matching bound.
inline int transversal_number(const std::vector<VarSet>& clauses) {
    if (clauses.empty()) return 0;
    for (VarSet c : clauses)
        if (c == 0) return -1; // no transversal
    VarSet greedy = 0;
    for (VarSet c : clauses)
        if ((c & greedy) == 0) greedy |= bit(lowest(c));
    int best = std::popcount(greedy);
    std::vector<VarSet> scratch(clauses.begin(), clauses.end());
    detail::tau_search(scratch, 0, scratch.size(), 0, best);
    return best;
}

inline int transversal_number(const MonotoneCnf& f) { return transversal_number(f.clauses); }

inline bool is_transversal(const std::vector<VarSet>& clauses, VarSet s) {
    for (VarSet c : clauses)
        if ((c & s) == 0) return false;
    return true;
}

inline bool is_transversal(const MonotoneCnf& f, VarSet s) { return is_transversal(f.clauses, s); }

struct TransversalSet {
    int t = 0;
    std::vector<VarSet> members; // lexicographic order
};

namespace detail {

// Visits every size-k subset of `pool` whose smallest element is pool[first],
// in lexicographic order.
template <class F>
void for_each_subset_with_first(const std::vector<int>& pool, int k, std::size_t first, F&& f) {
    const std::size_t m = pool.size();
    if (k == 0 || first + k > m) return;
    std::vector<std::size_t> idx(k);
    idx[0] = first;
    for (int i = 1; i < k; ++i) idx[i] = first + i;
    for (;;) {
        VarSet s = 0;
        for (std::size_t i : idx) s |= bit(pool[i]);
        f(s);
        int i = k - 1;
        while (i >= 1 && idx[i] == m - k + i) --i;
        if (i < 1) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

template <class F>
void parallel_for(std::size_t count, int jobs, F&& f) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += jobs) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace detail

// Every size-t subset of the universe that hits all clauses, by exhaustion.
inline TransversalSet brute_force_transversals(const MonotoneCnf& f, int t, int jobs = 1) {
    TransversalSet out;
    out.t = t;
    const std::vector<int> pool = members(f.universe);
    if (t < 0 || t > static_cast<int>(pool.size())) return out;
    if (t == 0) {
        if (is_transversal(f, 0)) out.members.push_back(0);
        return out;
    }
    std::vector<std::vector<VarSet>> parts(pool.size());
    detail::parallel_for(pool.size(), jobs, [&](std::size_t first) {
        detail::for_each_subset_with_first(pool, t, first, [&](VarSet s) {
            if (is_transversal(f, s)) parts[first].push_back(s);
        });
    });
    for (auto& p : parts) out.members.insert(out.members.end(), p.begin(), p.end());
    return out;
}

inline std::uint64_t count_transversals(const MonotoneCnf& f, int t, int jobs = 1) {
    const std::vector<int> pool = members(f.universe);
    if (t < 0 || t > static_cast<int>(pool.size())) return 0;
    if (t == 0) return is_transversal(f, 0) ? 1 : 0;
    std::vector<std::uint64_t> parts(pool.size(), 0);
    detail::parallel_for(pool.size(), jobs, [&](std::size_t first) {
        detail::for_each_subset_with_first(pool, t, first, [&](VarSet s) {
            if (is_transversal(f, s)) ++parts[first];
        });
    });
    std::uint64_t total = 0;
    for (auto p : parts) total += p;
    return total;
}

// Every member x of trans has a clause C with C ∩ trans = {x}.
inline bool verify_critical_clauses(const MonotoneCnf& f, VarSet trans) {
    bool ok = true;
    for_each_member(trans, [&](int x) {
        if (!ok) return;
        bool found = false;
        for (VarSet c : f.clauses) {
            if ((c & trans) == bit(x)) {
                found = true;
                break;
            }
        }
        ok = found;
    });
    return ok;
}

// MCNF v1: "p mcnf <n> <m>", then m lines of sorted 1-based indices.
inline std::string to_mcnf(const MonotoneCnf& f) {
    std::vector<VarSet> cs = f.clauses;
    sort_lex(cs);
    std::string out = "p mcnf " + std::to_string(f.n) + " " + std::to_string(cs.size()) + "\n";
    for (VarSet c : cs) {
        out += format_set(c);
        out += '\n';
    }
    return out;
}

inline MonotoneCnf parse_mcnf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    int n = 0;
    long m = 0;
    std::vector<VarSet> clauses;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == "c" || line.rfind("c ", 0) == 0) continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string p, kind;
            if (!(ls >> p >> kind >> n >> m) || p != "p" || kind != "mcnf") fail("expected 'p mcnf <n> <m>'");
            std::string extra;
            if (ls >> extra) fail("trailing tokens in header");
            if (n < 0 || n > kMaxVars) throw Error(Errc::UniverseTooLarge, "n=" + std::to_string(n));
            if (m < 0) fail("negative clause count");
            have_header = true;
            continue;
        }
        VarSet c = 0;
        std::string tok;
        int prev = 0;
        while (ls >> tok) {
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(tok, &used);
                if (used != tok.size()) fail("bad index '" + tok + "'");
            } catch (const std::logic_error&) {
                fail("bad index '" + tok + "'");
            }
            if (v < 1 || v > n) fail("index " + tok + " out of range");
            if (v <= prev) fail("clause indices must be strictly increasing");
            prev = v;
            c |= bit(v - 1);
        }
        if (c == 0) fail("empty clause");
        if (std::popcount(c) > 3) fail("clause wider than 3");
        clauses.push_back(c);
    }
    if (!have_header) throw Error(Errc::ParseError, "missing header");
    if (static_cast<long>(clauses.size()) != m)
        throw Error(Errc::ParseError, "header announces " + std::to_string(m) + " clauses, found " +
                                          std::to_string(clauses.size()));
    return MonotoneCnf::make(n, std::move(clauses));
}

} // namespace tlab
