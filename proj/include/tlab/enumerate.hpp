#pragma once

// Enumeration of minimum transversals by branching. Structured mode follows the
// case tables selected by find_property; generic mode branches on a clause.
//
// A node is a formula G (already restricted) with budget t'. Every transversal
// T of the root with |T| = tau extends the node's included set by a transversal
// of G of size exactly t', and tau(G) >= t' holds at every node, so all
// size-t' transversals of G are minimal there.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_set>
#include <vector>

#include "tlab/bounds.hpp"
#include "tlab/classify.hpp"
#include "tlab/cnf.hpp"
#include "tlab/rules.hpp"

namespace tlab {

enum class EnumMode { Structured, Generic };

struct CertResult {
    bool checked = false; // false when (s,t) lies outside the bound's validity
    bool ok = true;
    FormulaType type = FormulaType::T0;
    int s = 0;
    Rational bound;
    Rational slack; // bound - count
    bool six_quarter_checked = false;
    int six_quarter_cmp = 0; // sign of count - 6^(n/4)
    std::string note;
};

struct EnumStats {
    std::uint64_t nodes = 0;
    std::uint64_t dead = 0;
    std::uint64_t leaves = 0;
    std::uint64_t generic_nodes = 0;
    std::uint64_t structured_nodes = 0;
    std::uint64_t fallbacks = 0;     // structured mode found no property
    std::uint64_t residual_rows = 0; // core assignments no table row covers
    std::uint64_t duplicates = 0;
    std::uint64_t type_mismatches = 0; // child type other than the row's expected type
    int max_depth = 0;
    std::map<std::string, std::uint64_t> tables;
    std::map<std::string, std::uint64_t> types;
    std::optional<CertResult> cert;

    void merge(const EnumStats& o) {
        nodes += o.nodes;
        dead += o.dead;
        leaves += o.leaves;
        generic_nodes += o.generic_nodes;
        structured_nodes += o.structured_nodes;
        fallbacks += o.fallbacks;
        residual_rows += o.residual_rows;
        duplicates += o.duplicates;
        type_mismatches += o.type_mismatches;
        max_depth = std::max(max_depth, o.max_depth);
        for (const auto& [k, v] : o.tables) tables[k] += v;
        for (const auto& [k, v] : o.types) types[k] += v;
    }
};

struct EnumResult {
    TransversalSet transversals;
    EnumStats stats;
};

struct EnumOptions {
    EnumMode mode = EnumMode::Structured;
    int jobs = 1;
    bool certify = false;
};

// Counts the bound of the root's type at s = 3t - n, and 6^(n/4) when t = floor(n/2).
inline CertResult certify_bound(const MonotoneCnf& f, int t, const BigInt& count) {
    CertResult r;
    const int n = f.num_vars();
    r.s = 3 * t - n;
    bool units = false;
    for (VarSet c : f.clauses) units = units || set_size(c) < 2;
    if (t == n / 2 && n >= 1) {
        r.six_quarter_checked = true;
        r.six_quarter_cmp = six_quarter_bound(n).compare(count);
        if (r.six_quarter_cmp > 0) r.ok = false;
    }
    if (units) {
        r.note = "unit clauses; type bound skipped";
        return r;
    }
    r.type = formula_type(f);
    if (!phi_in_validity(r.s, t)) {
        r.note = "s outside [0, t]; type bound skipped";
        return r;
    }
    r.checked = true;
    r.bound = phi_upper({r.type, r.s, t});
    r.slack = r.bound - Rational(count);
    if (r.slack < 0) r.ok = false;
    return r;
}

namespace detail {

struct Node {
    MonotoneCnf g;
    int t = 0;
    VarSet included = 0;
    int depth = 0;
};

struct Cube {
    VarSet inc = 0, exc = 0;
};

// Core cubes for each row: core literals plus forced literals on core letters.
// Forced literals on other letters are claims of the case analysis and are not
// applied.
inline std::vector<Cube> row_cubes(const BranchRule& rule, const PropertyMatch& m) {
    std::vector<Cube> out;
    for (const auto& row : rule.rows) {
        Cube c;
        auto add = [&](const Literal& l) {
            bool core = false;
            for (const auto& cl : rule.core_letters) core = core || cl == l.letter;
            if (!core) return;
            const int v = m.var(l.letter);
            (l.value ? c.inc : c.exc) |= bit(v);
        };
        for (const auto& l : row.core) add(l);
        for (const auto& l : row.forced) add(l);
        out.push_back(c);
    }
    return out;
}

} // namespace detail

struct RuleBranch {
    const BranchRow* row = nullptr;
    MonotoneCnf cnf;
    int dt = 0;                 // t decrement, the number of included variables
    PartialAssignment emitted;  // core plus forced literals, for reconstruction
};

// One branch per row of the matched table whose assignment is consistent and
// whose restriction is satisfiable. Unlike the enumerator, forced literals on
// every matched letter are applied.
inline std::vector<RuleBranch> apply_rule(const MonotoneCnf& f, const PropertyMatch& m) {
    const BranchRule& rule = rule_by_key(m.table);
    std::vector<RuleBranch> out;
    for (const auto& row : rule.rows) {
        PartialAssignment pa;
        auto add = [&](const Literal& l) {
            const int v = m.var(l.letter);
            if (v >= 0) (l.value ? pa.included : pa.excluded) |= bit(v);
        };
        for (const auto& l : row.core) add(l);
        for (const auto& l : row.forced) add(l);
        if (!pa.consistent()) continue;
        auto r = restrict(f, pa);
        if (!r) continue;
        out.push_back({&row, std::move(*r), set_size(pa.included), pa});
    }
    return out;
}

namespace detail {

class Engine {
  public:
    Engine(EnumMode mode, EnumStats& stats, std::vector<VarSet>& out) : mode_(mode), stats_(stats), out_(out) {}

    void explore(Node node) {
        std::vector<Node> kids;
        step(std::move(node), kids);
        for (auto& k : kids) explore(std::move(k));
    }

    // Propagates, then either emits, dies, or pushes children.
    void step(Node node, std::vector<Node>& kids) {
        ++stats_.nodes;
        stats_.max_depth = std::max(stats_.max_depth, node.depth);
        MonotoneCnf& g = node.g;
        for (;;) {
            if (node.t < 0) return kill();
            VarSet units = 0;
            for (VarSet c : g.clauses)
                if (set_size(c) == 1) units |= c;
            // vars outside every clause can't be in a minimal transversal
            const VarSet idle = g.universe & ~g.support();
            if (!units && !idle) break;
            node.included |= units;
            node.t -= set_size(units);
            auto r = restrict(g, PartialAssignment{units, idle});
            if (!r) return kill();
            g = std::move(*r);
        }
        if (g.clauses.empty()) {
            if (node.t != 0) return kill();
            ++stats_.leaves;
            if (!seen_.insert(node.included).second) {
                ++stats_.duplicates;
                return;
            }
            out_.push_back(node.included);
            return;
        }
        if (node.t == 0 || greedy_matching_bound(g.clauses) > node.t) return kill();

        const int s = 3 * node.t - g.num_vars();
        if (mode_ == EnumMode::Structured && s > 0 && structured(node, s, kids)) return;
        generic(node, kids);
    }

  private:
    void kill() { ++stats_.dead; }

    void push(const Node& parent, VarSet inc, VarSet exc, std::vector<Node>& kids) {
        auto r = restrict(parent.g, PartialAssignment{inc, exc});
        if (!r) {
            ++stats_.dead;
            return;
        }
        kids.push_back(Node{std::move(*r), parent.t - set_size(inc), parent.included | inc, parent.depth + 1});
    }

    void generic(const Node& node, std::vector<Node>& kids) {
        ++stats_.generic_nodes;
        VarSet pick = node.g.clauses.front();
        for (VarSet c : node.g.clauses)
            if (set_size(c) < set_size(pick)) pick = c;
        VarSet earlier = 0;
        for_each_member(pick, [&](int v) {
            push(node, bit(v), earlier, kids);
            earlier |= bit(v);
        });
    }

    bool structured(const Node& node, int s, std::vector<Node>& kids) {
        const FormulaType type = formula_type(node.g);
        std::optional<PropertyMatch> m = try_find_property(node.g, type, s % 2 != 0);
        if (!m) {
            ++stats_.fallbacks;
            return false;
        }
        const auto& cores = m->cores;
        VarSet core_set = 0;
        for (int v : cores) core_set |= bit(v);
        if (set_size(core_set) != static_cast<int>(cores.size())) {
            ++stats_.fallbacks;
            return false;
        }
        ++stats_.structured_nodes;
        ++stats_.tables[m->table];
        ++stats_.types[type_name(type)];
        const BranchRule& rule = rule_by_key(m->table);
        const auto cubes = row_cubes(rule, *m);

        // Each full core assignment goes to the first row containing it; rows
        // whose region is their whole cube branch once, everything else per
        // assignment.
        const int k = static_cast<int>(cores.size());
        const std::uint32_t full = 1u << k;
        std::vector<int> owner(full, -1);
        auto to_sets = [&](std::uint32_t mask) {
            Cube c;
            for (int i = 0; i < k; ++i) ((mask >> i & 1) ? c.inc : c.exc) |= bit(cores[i]);
            return c;
        };
        for (std::uint32_t a = 0; a < full; ++a) {
            const Cube x = to_sets(a);
            for (std::size_t r = 0; r < cubes.size(); ++r)
                if ((cubes[r].inc & ~x.inc) == 0 && (cubes[r].exc & ~x.exc) == 0) {
                    owner[a] = static_cast<int>(r);
                    break;
                }
        }
        for (std::size_t r = 0; r < cubes.size(); ++r) {
            const int fixed = set_size(cubes[r].inc | cubes[r].exc);
            int owned = 0;
            for (int o : owner) owned += o == static_cast<int>(r);
            if (owned == (1 << (k - fixed))) {
                const std::size_t before = kids.size();
                push(node, cubes[r].inc, cubes[r].exc, kids);
                if (kids.size() > before) note_type(rule.rows[r], kids.back());
            } else {
                for (std::uint32_t a = 0; a < full; ++a)
                    if (owner[a] == static_cast<int>(r)) {
                        const Cube x = to_sets(a);
                        push(node, x.inc, x.exc, kids);
                    }
            }
        }
        for (std::uint32_t a = 0; a < full; ++a)
            if (owner[a] < 0) {
                ++stats_.residual_rows;
                const Cube x = to_sets(a);
                push(node, x.inc, x.exc, kids);
            }
        return true;
    }

    void note_type(const BranchRow& row, const Node& child) {
        if (!row.expected_type) return;
        for (VarSet c : child.g.clauses)
            if (set_size(c) < 2) return; // units change the picture before classification
        if (formula_type(child.g) != *row.expected_type) ++stats_.type_mismatches;
    }

    EnumMode mode_;
    EnumStats& stats_;
    std::vector<VarSet>& out_;
    std::unordered_set<VarSet> seen_;
};

} // namespace detail

inline EnumResult enumerate_min_transversals(const MonotoneCnf& f, int t, const EnumOptions& opt = {}) {
    const int tau = transversal_number(f);
    if (tau != t)
        throw Error(Errc::PreconditionTauMismatch,
                    "tau=" + std::to_string(tau) + " but t=" + std::to_string(t));
    EnumResult res;
    res.transversals.t = t;
    detail::Node root{normalize(f), t, 0, 0};

    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        detail::Engine eng(opt.mode, res.stats, res.transversals.members);
        eng.explore(std::move(root));
    } else {
        // Breadth-first until the frontier can keep every worker busy.
        std::vector<VarSet> early;
        std::vector<detail::Node> frontier{std::move(root)};
        {
            detail::Engine eng(opt.mode, res.stats, early);
            while (!frontier.empty() && frontier.size() < static_cast<std::size_t>(4 * jobs)) {
                std::vector<detail::Node> next;
                for (auto& n : frontier) eng.step(std::move(n), next);
                frontier = std::move(next);
            }
        }
        std::vector<EnumStats> stats(jobs);
        std::vector<std::vector<VarSet>> outs(jobs);
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                detail::Engine eng(opt.mode, stats[w], outs[w]);
                for (std::size_t i; (i = cursor++) < frontier.size();) eng.explore(std::move(frontier[i]));
            });
        for (auto& th : pool) th.join();
        auto& all = res.transversals.members;
        all = std::move(early);
        for (int w = 0; w < jobs; ++w) {
            res.stats.merge(stats[w]);
            all.insert(all.end(), outs[w].begin(), outs[w].end());
        }
    }
    auto& all = res.transversals.members;
    sort_lex(all);
    // subtrees are disjoint, so cross-worker repeats would be engine bugs
    const auto dup = std::unique(all.begin(), all.end());
    res.stats.duplicates += static_cast<std::uint64_t>(all.end() - dup);
    all.erase(dup, all.end());
    if (opt.certify) res.stats.cert = certify_bound(f, t, BigInt(all.size()));
    return res;
}

} // namespace tlab
