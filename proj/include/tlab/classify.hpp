#pragma once

// Formula types, clause configurations and the structural properties that pick
// a branching table.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlab/cnf.hpp"
#include "tlab/error.hpp"
#include "tlab/rules.hpp"
#include "tlab/types.hpp"

namespace tlab {

// Assumes no unit clauses. Three 2-clauses through one variable tag as 2o (the
// P4_3 table then applies, see find_property).
inline FormulaType formula_type(const MonotoneCnf& f) {
    std::vector<VarSet> twos;
    for (VarSet c : f.clauses)
        if (set_size(c) == 2) twos.push_back(c);
    if (twos.empty()) return FormulaType::T0;
    if (twos.size() == 1) return FormulaType::T1;
    if (twos.size() >= 4) return FormulaType::T4;
    bool overlap = false;
    for (std::size_t i = 0; i < twos.size(); ++i)
        for (std::size_t j = i + 1; j < twos.size(); ++j) overlap = overlap || (twos[i] & twos[j]);
    if (twos.size() == 2) return overlap ? FormulaType::T2o : FormulaType::T2d;
    const VarSet common = twos[0] & twos[1] & twos[2];
    return common ? FormulaType::T2o : FormulaType::T3;
}

enum class ConfigKind { PairInGe3Clauses, VarInGe3Clauses, PairInExactly2, Triangle, EConfig, UniqueVar, Path, Cycle };

inline const char* config_kind_name(ConfigKind k) {
    switch (k) {
    case ConfigKind::PairInGe3Clauses: return "pair_in_ge3";
    case ConfigKind::VarInGe3Clauses: return "var_in_ge3";
    case ConfigKind::PairInExactly2: return "pair_in_exactly2";
    case ConfigKind::Triangle: return "triangle";
    case ConfigKind::EConfig: return "econfig";
    case ConfigKind::UniqueVar: return "unique_var";
    case ConfigKind::Path: return "path";
    case ConfigKind::Cycle: return "cycle";
    }
    return "?";
}

struct ConfigQuery {
    ConfigKind kind = ConfigKind::Triangle;
    int length = 0; // Path and Cycle only, counted in 2-clauses
};

struct Configuration {
    ConfigKind kind = ConfigKind::Triangle;
    std::vector<VarSet> anchor;
    // Triangle: a b c d e f. EConfig: a..i (spine a b c). Path: a_0..a_len.
    std::vector<int> vars;
};

struct PropertyMatch {
    std::string id;    // "P2o_7"
    std::string table; // rule key, "P2o_7.2"
    FormulaType type = FormulaType::T0;
    bool odd_s = false;
    std::vector<VarSet> anchor;
    std::vector<std::pair<std::string, int>> letters;
    std::vector<int> cores; // in the table's core-letter order

    int var(const std::string& letter) const {
        for (const auto& [l, v] : letters)
            if (l == letter) return v;
        return -1;
    }
};

namespace detail {

struct ClauseIndex {
    const std::vector<VarSet>& clauses;
    std::vector<VarSet> twos, threes;
    std::array<int, kMaxVars> deg{};
    std::array<int, kMaxVars> deg2{};
    VarSet support = 0;

    explicit ClauseIndex(const std::vector<VarSet>& cs) : clauses(cs) {
        for (VarSet c : cs) {
            const int w = set_size(c);
            if (w == 2) twos.push_back(c);
            if (w == 3) threes.push_back(c);
            support |= c;
            for_each_member(c, [&](int v) {
                ++deg[v];
                if (w == 2) ++deg2[v];
            });
        }
    }

    // Clauses containing all of `in` and none of `out`, in clause order.
    std::vector<VarSet> with(VarSet in, VarSet out = 0) const {
        std::vector<VarSet> r;
        for (VarSet c : clauses)
            if ((c & in) == in && !(c & out)) r.push_back(c);
        return r;
    }
    int count_with(VarSet in, VarSet out = 0) const {
        int k = 0;
        for (VarSet c : clauses) k += (c & in) == in && !(c & out);
        return k;
    }
};

inline int only(VarSet s) { return set_size(s) == 1 ? lowest(s) : -1; }

// Members of c other than those in `drop`, ascending, padded with -1.
inline std::array<int, 2> rest2(VarSet c, VarSet drop) {
    std::array<int, 2> r{-1, -1};
    int i = 0;
    for_each_member(c & ~drop, [&](int v) {
        if (i < 2) r[i++] = v;
    });
    return r;
}

inline int other_end(VarSet edge, int v) { return lowest(edge & ~bit(v)); }

using Letters = std::vector<std::pair<std::string, int>>;

inline PropertyMatch make_match(const std::string& key, FormulaType type, bool odd, std::vector<VarSet> anchor,
                                Letters letters) {
    PropertyMatch m;
    const BranchRule& rule = rule_by_key(key);
    m.id = rule.property;
    m.table = key;
    m.type = type;
    m.odd_s = odd;
    m.anchor = std::move(anchor);
    std::erase_if(letters, [](const auto& p) { return p.second < 0; });
    m.letters = std::move(letters);
    for (const auto& l : rule.core_letters) {
        const int v = m.var(l);
        if (v < 0) throw std::logic_error("core letter " + l + " unbound in " + key);
        m.cores.push_back(v);
    }
    return m;
}

inline std::optional<Configuration> find_triangle(const ClauseIndex& ix) {
    const auto& cs = ix.clauses;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (set_size(cs[i]) != 3) continue;
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            if (set_size(cs[j]) != 3) continue;
            const VarSet shared = cs[i] & cs[j];
            if (!shared) continue;
            for (int b : members(shared)) {
                for (int a : members(cs[i] & ~bit(b))) {
                    if (cs[j] & bit(a)) continue;
                    for (int c : members(cs[j] & ~bit(b))) {
                        if (cs[i] & bit(c)) continue;
                        for (std::size_t k = 0; k < cs.size(); ++k) {
                            const VarSet ck = cs[k];
                            if (k == i || k == j || set_size(ck) != 3) continue;
                            if ((ck & (bit(a) | bit(c))) != (bit(a) | bit(c)) || (ck & bit(b))) continue;
                            const int d = only(cs[i] & ~(bit(a) | bit(b)));
                            const int e = only(cs[j] & ~(bit(b) | bit(c)));
                            const int f = only(ck & ~(bit(a) | bit(c)));
                            Configuration cfg;
                            cfg.kind = ConfigKind::Triangle;
                            cfg.anchor = {cs[i], cs[j], ck};
                            cfg.vars = {a, b, c, d, e, f};
                            return cfg;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

inline std::optional<Configuration> find_econfig(const ClauseIndex& ix) {
    for (VarSet spine : ix.clauses) {
        if (set_size(spine) != 3) continue;
        const auto sv = members(spine);
        std::array<std::vector<VarSet>, 3> arms;
        bool ok = true;
        for (int k = 0; k < 3; ++k) {
            for (VarSet c : ix.clauses)
                if (c != spine && set_size(c) == 3 && (c & spine) == bit(sv[k])) arms[k].push_back(c);
            ok = ok && !arms[k].empty();
        }
        if (!ok) continue;
        Configuration cfg;
        cfg.kind = ConfigKind::EConfig;
        cfg.anchor = {spine, arms[0][0], arms[1][0], arms[2][0]};
        cfg.vars = {sv[0], sv[1], sv[2]};
        for (int k = 0; k < 3; ++k) {
            const auto r = rest2(arms[k][0], spine);
            cfg.vars.push_back(r[0]);
            cfg.vars.push_back(r[1]);
        }
        return cfg;
    }
    return std::nullopt;
}

inline std::optional<Configuration> find_pair_config(const ClauseIndex& ix, ConfigKind kind) {
    const auto sup = members(ix.support);
    for (std::size_t i = 0; i < sup.size(); ++i)
        for (std::size_t j = i + 1; j < sup.size(); ++j) {
            const VarSet p = bit(sup[i]) | bit(sup[j]);
            const int k = ix.count_with(p);
            if (kind == ConfigKind::PairInGe3Clauses ? k >= 3 : k == 2) {
                auto cs = ix.with(p);
                if (cs.size() > 3) cs.resize(3);
                return Configuration{kind, cs, {sup[i], sup[j]}};
            }
        }
    return std::nullopt;
}

// Simple paths/cycles in the graph of 2-clauses; lexicographically least
// vertex sequence.
inline std::optional<Configuration> find_path_or_cycle(const ClauseIndex& ix, int len, bool cycle) {
    if (len < 1 || (cycle && len < 3)) return std::nullopt;
    std::vector<int> seq;
    VarSet used = 0;
    std::function<bool(int)> extend = [&](int v) -> bool {
        if (static_cast<int>(seq.size()) == len + (cycle ? 0 : 1)) {
            if (!cycle) return true;
            for (VarSet e : ix.twos)
                if (e == (bit(seq.front()) | bit(seq.back()))) return true;
            return false;
        }
        std::vector<int> next;
        for (VarSet e : ix.twos)
            if (e & bit(v)) next.push_back(other_end(e, v));
        std::sort(next.begin(), next.end());
        for (int w : next) {
            if (used & bit(w)) continue;
            seq.push_back(w);
            used |= bit(w);
            if (extend(w)) return true;
            seq.pop_back();
            used &= ~bit(w);
        }
        return false;
    };
    for (int v : members(ix.support)) {
        if (!ix.deg2[v]) continue;
        seq = {v};
        used = bit(v);
        if (extend(v)) {
            Configuration cfg;
            cfg.kind = cycle ? ConfigKind::Cycle : ConfigKind::Path;
            cfg.vars = seq;
            const std::size_t edges = cycle ? seq.size() : seq.size() - 1;
            for (std::size_t i = 0; i < edges; ++i)
                cfg.anchor.push_back(bit(seq[i]) | bit(seq[(i + 1) % seq.size()]));
            return cfg;
        }
    }
    return std::nullopt;
}

} // namespace detail

inline std::optional<Configuration> detect_configuration(const MonotoneCnf& f, ConfigQuery q) {
    const detail::ClauseIndex ix(f.clauses);
    const auto sup = members(ix.support);
    switch (q.kind) {
    case ConfigKind::PairInGe3Clauses:
    case ConfigKind::PairInExactly2: return detail::find_pair_config(ix, q.kind);
    case ConfigKind::VarInGe3Clauses:
        for (int v : sup)
            if (ix.deg[v] >= 3) {
                auto cs = ix.with(bit(v));
                cs.resize(3);
                return Configuration{q.kind, cs, {v}};
            }
        return std::nullopt;
    case ConfigKind::UniqueVar:
        for (int v : sup)
            if (ix.deg[v] == 1) return Configuration{q.kind, ix.with(bit(v)), {v}};
        return std::nullopt;
    case ConfigKind::Triangle: return detail::find_triangle(ix);
    case ConfigKind::EConfig: return detail::find_econfig(ix);
    case ConfigKind::Path: return detail::find_path_or_cycle(ix, q.length, false);
    case ConfigKind::Cycle: return detail::find_path_or_cycle(ix, q.length, true);
    }
    return std::nullopt;
}

namespace detail {

using Match = std::optional<PropertyMatch>;

inline Match props_t0(const ClauseIndex& ix, bool odd) {
    const auto T = FormulaType::T0;
    const auto sup = members(ix.support);
    // P0_1
    for (std::size_t i = 0; i < sup.size(); ++i)
        for (std::size_t j = i + 1; j < sup.size(); ++j) {
            int a = sup[i], b = sup[j];
            const VarSet p = bit(a) | bit(b);
            auto cs = ix.with(p);
            if (cs.size() < 3) continue;
            cs.resize(3);
            std::string key = "P0_1.b";
            if (ix.deg[a] == static_cast<int>(ix.count_with(p))) {
                key = "P0_1.a";
            } else if (ix.deg[b] == static_cast<int>(ix.count_with(p))) {
                key = "P0_1.a";
                std::swap(a, b);
            }
            return make_match(key, T, odd, cs,
                              {{"a", a}, {"b", b}, {"c", only(cs[0] & ~p)}, {"d", only(cs[1] & ~p)},
                               {"e", only(cs[2] & ~p)}});
        }
    // P0_2
    for (int a : sup) {
        if (ix.deg[a] < 3) continue;
        const auto cs = ix.with(bit(a));
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j)
                for (std::size_t k = j + 1; k < cs.size(); ++k) {
                    const VarSet r1 = cs[i] & ~bit(a), r2 = cs[j] & ~bit(a), r3 = cs[k] & ~bit(a);
                    if (r1 & r2 & r3) continue;
                    const auto p = rest2(r1, 0), q = rest2(r2, 0), r = rest2(r3, 0);
                    return make_match("P0_2", T, odd, {cs[i], cs[j], cs[k]},
                                      {{"a", a}, {"b", p[0]}, {"c", p[1]}, {"d", q[0]}, {"e", q[1]}, {"f", r[0]},
                                       {"g", r[1]}});
                }
    }
    // P0_3
    if (auto c = find_pair_config(ix, ConfigKind::PairInExactly2)) {
        const int a = c->vars[0], b = c->vars[1];
        const VarSet p = bit(a) | bit(b);
        return make_match("P0_3", T, odd, c->anchor,
                          {{"a", a}, {"b", b}, {"c", only(c->anchor[0] & ~p)}, {"d", only(c->anchor[1] & ~p)}});
    }
    // P0_4
    if (auto c = find_triangle(ix)) {
        const auto& v = c->vars;
        return make_match("P0_4", T, odd, c->anchor,
                          {{"a", v[0]}, {"b", v[1]}, {"c", v[2]}, {"d", v[3]}, {"e", v[4]}, {"f", v[5]}});
    }
    // P0_5
    if (auto c = find_econfig(ix)) {
        Letters l;
        const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
        for (int k = 0; k < 9; ++k) l.push_back({names[k], c->vars[k]});
        return make_match("P0_5", T, odd, c->anchor, l);
    }
    // P0_6
    for (int a : sup) {
        if (ix.deg[a] != 1) continue;
        const VarSet cl = ix.with(bit(a))[0];
        const auto bc = rest2(cl, bit(a));
        for (int flip = 0; flip < 2; ++flip) {
            const int b = bc[flip], c = bc[1 - flip];
            if (b < 0 || c < 0) break;
            for (VarSet cb : ix.with(bit(b), bit(c)))
                for (VarSet cc : ix.with(bit(c), bit(b))) {
                    if (cb == cl || cc == cl) continue;
                    const VarSet rb = cb & ~bit(b), rc = cc & ~bit(c);
                    if ((rb & rc) || set_size(rb) != 2 || set_size(rc) != 2) continue;
                    const auto de = rest2(rb, 0), fg = rest2(rc, 0);
                    return make_match("P0_6.a", FormulaType::T0, odd, {cl, cb, cc},
                                      {{"a", a}, {"b", b}, {"c", c}, {"d", de[0]}, {"e", de[1]}, {"f", fg[0]},
                                       {"g", fg[1]}});
                }
        }
        for (int flip = 0; flip < 2; ++flip) {
            const int b = bc[flip], c = bc[1 - flip];
            if (b < 0 || c < 0) break;
            if (ix.deg[b] == 1) return make_match("P0_6.b", T, odd, {cl}, {{"a", a}, {"b", b}, {"c", c}});
        }
    }
    return std::nullopt;
}

inline Match props_t1(const ClauseIndex& ix, bool odd) {
    const VarSet e = ix.twos.at(0);
    const int u = lowest(e), w = other_end(e, u);
    for (auto [a, b] : {std::pair{u, w}, std::pair{w, u}})
        if (ix.deg[a] == 1) return make_match("P1_1", FormulaType::T1, odd, {e}, {{"a", a}, {"b", b}});
    for (auto [a, b] : {std::pair{u, w}, std::pair{w, u}}) {
        const auto cs = ix.with(bit(a), bit(b));
        if (cs.empty()) continue;
        const auto r = rest2(cs[0], bit(a));
        return make_match("P1_2", FormulaType::T1, odd, {e, cs[0]}, {{"a", a}, {"b", b}, {"c", r[0]}, {"d", r[1]}});
    }
    return std::nullopt;
}

// Residual pair of each clause containing x and not y, other than the 2-clause.
inline std::vector<VarSet> own_clauses(const ClauseIndex& ix, int x, int y) {
    std::vector<VarSet> r;
    for (VarSet c : ix.with(bit(x), bit(y)))
        if (set_size(c) == 3) r.push_back(c);
    return r;
}

inline Match props_t2o(const ClauseIndex& ix, bool odd) {
    const auto T = FormulaType::T2o;
    const VarSet e1 = ix.twos[0], e2 = ix.twos[1];
    const int a = only(e1 & e2);
    const int b0 = other_end(e1, a), c0 = other_end(e2, a);
    const std::vector<VarSet> base = {e1, e2};
    auto anchor = [&](std::initializer_list<VarSet> more) {
        auto r = base;
        r.insert(r.end(), more);
        return r;
    };
    if (odd) return make_match("P2o_odd", T, odd, base, {{"a", a}, {"b", b0}, {"c", c0}});

    const std::pair<int, int> orients[] = {{b0, c0}, {c0, b0}};
    // P2o_1
    if (ix.deg[a] >= 3) {
        const VarSet cl = ix.with(bit(a), bit(b0) | bit(c0)).at(0);
        const auto de = rest2(cl, bit(a));
        return make_match("P2o_1", T, odd, anchor({cl}), {{"a", a}, {"b", b0}, {"c", c0}, {"d", de[0]}, {"e", de[1]}});
    }
    // P2o_2
    for (auto [b, c] : orients) {
        if (ix.deg[b] < 4) continue;
        auto cs = ix.with(bit(b));
        std::erase(cs, bit(a) | bit(b));
        cs.resize(3);
        const VarSet r1 = cs[0] & ~bit(b), r2 = cs[1] & ~bit(b), r3 = cs[2] & ~bit(b);
        const VarSet common = r1 & r2 & r3;
        Letters l = {{"a", a}, {"b", b}, {"c", c}};
        if (common) {
            const int d = lowest(common);
            l.insert(l.end(), {{"d", d},
                               {"e", other_end(r1, d)},
                               {"f", d},
                               {"g", other_end(r2, d)},
                               {"h", d},
                               {"i", other_end(r3, d)}});
            return make_match("P2o_2.2", T, odd, anchor({cs[0], cs[1], cs[2]}), l);
        }
        return make_match("P2o_2.1", T, odd, anchor({cs[0], cs[1], cs[2]}), l);
    }
    // P2o_3
    for (auto [b, c] : orients)
        if (ix.deg[b] == 1) return make_match("P2o_3", T, odd, base, {{"a", a}, {"b", b}, {"c", c}});

    const VarSet bcp = bit(b0) | bit(c0);
    const auto both = ix.with(bcp);
    // P2o_4
    if (both.size() >= 2) {
        return make_match("P2o_4", T, odd, anchor({both[0], both[1]}),
                          {{"a", a}, {"b", b0}, {"c", c0}, {"d", only(both[0] & ~bcp)}, {"e", only(both[1] & ~bcp)}});
    }
    const int bc = static_cast<int>(both.size());
    // P2o_5
    if (bc == 1) {
        const int d = only(both[0] & ~bcp);
        for (auto [b, c] : orients) {
            const auto ob = own_clauses(ix, b, c), oc = own_clauses(ix, c, b);
            if (ob.size() != 1 || oc.size() != 1) break;
            const auto ef = rest2(ob[0], bit(b)), gh = rest2(oc[0], bit(c));
            const bool d_in_b = ob[0] & bit(d), d_in_c = oc[0] & bit(d);
            if (!d_in_b && !d_in_c)
                return make_match("P2o_5.1", T, odd, anchor({both[0], ob[0], oc[0]}),
                                  {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", ef[0]}, {"f", ef[1]}, {"g", gh[0]},
                                   {"h", gh[1]}});
            if (d_in_b)
                return make_match("P2o_5.2", T, odd, anchor({both[0], ob[0], oc[0]}),
                                  {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", d}, {"f", other_end(ob[0] & ~bit(b), d)},
                                   {"g", gh[0]}, {"h", gh[1]}});
        }
    }
    // P2o_6
    for (auto [b, c] : orients) {
        const auto ob = own_clauses(ix, b, c), oc = own_clauses(ix, c, b);
        for (VarSet x : ob)
            for (VarSet y : oc) {
                if ((x & ~bit(b)) != (y & ~bit(c))) continue;
                for (VarSet z : ob) {
                    if (z == x) continue;
                    const auto de = rest2(x, bit(b)), fg = rest2(z, bit(b));
                    return make_match("P2o_6", T, odd, anchor({x, y, z}),
                                      {{"a", a}, {"b", b}, {"c", c}, {"d", de[0]}, {"e", de[1]}, {"f", fg[0]},
                                       {"g", fg[1]}});
                }
            }
    }
    // P2o_7
    {
        const auto ob = own_clauses(ix, b0, c0), oc = own_clauses(ix, c0, b0);
        if (ob.size() == 2 && oc.size() == 2) {
            int best = -1, mult = 0;
            for (int v : members(ix.support)) {
                int k = 0;
                for (VarSet c : {ob[0], ob[1], oc[0], oc[1]}) k += (c & bit(v)) != 0;
                if (v != b0 && v != c0 && k > mult) mult = k, best = v;
            }
            int b = b0, c = c0;
            auto pb = ob, pc = oc;
            if (mult == 3 && !((pb[0] & pb[1]) & bit(best))) {
                std::swap(b, c);
                std::swap(pb, pc);
            }
            std::string key = mult >= 4 ? "P2o_7.3" : mult == 3 ? "P2o_7.2" : "P2o_7.1";
            Letters l = {{"a", a}, {"b", b}, {"c", c}};
            if (mult >= 3) {
                const int d = best;
                if (!(pc[0] & bit(d))) std::swap(pc[0], pc[1]);
                l.insert(l.end(), {{"d", d},
                                   {"e", other_end(pb[0] & ~bit(b), d)},
                                   {"f", d},
                                   {"g", other_end(pb[1] & ~bit(b), d)},
                                   {"d'", d},
                                   {"e'", other_end(pc[0] & ~bit(c), d)}});
                const auto fg = rest2(pc[1], bit(c));
                if (mult >= 4) {
                    l.insert(l.end(), {{"f'", d}, {"g'", other_end(pc[1] & ~bit(c), d)}});
                } else {
                    l.insert(l.end(), {{"f'", fg[0]}, {"g'", fg[1]}});
                }
            } else {
                const auto de = rest2(pb[0], bit(b)), fg = rest2(pb[1], bit(b));
                const auto de2 = rest2(pc[0], bit(c)), fg2 = rest2(pc[1], bit(c));
                l.insert(l.end(), {{"d", de[0]},
                                   {"e", de[1]},
                                   {"f", fg[0]},
                                   {"g", fg[1]},
                                   {"d'", de2[0]},
                                   {"e'", de2[1]},
                                   {"f'", fg2[0]},
                                   {"g'", fg2[1]}});
            }
            return make_match(key, T, odd, anchor({pb[0], pb[1], pc[0], pc[1]}), l);
        }
    }
    // P2o_8
    for (auto [b, c] : orients) {
        const auto ob = own_clauses(ix, b, c), oc = own_clauses(ix, c, b);
        if (ob.size() != 2 || oc.size() != 1 || bc != 0) continue;
        const VarSet common = (ob[0] & ob[1] & oc[0]) & ~(bit(b) | bit(c));
        Letters l = {{"a", a}, {"b", b}, {"c", c}};
        if (common) {
            const int d = lowest(common);
            l.insert(l.end(), {{"d", d},
                               {"e", other_end(ob[0] & ~bit(b), d)},
                               {"f", d},
                               {"g", other_end(ob[1] & ~bit(b), d)},
                               {"d'", d},
                               {"e'", other_end(oc[0] & ~bit(c), d)}});
            return make_match("P2o_8.2", T, odd, anchor({ob[0], ob[1], oc[0]}), l);
        }
        const auto de = rest2(ob[0], bit(b)), fg = rest2(ob[1], bit(b)), de2 = rest2(oc[0], bit(c));
        l.insert(l.end(),
                 {{"d", de[0]}, {"e", de[1]}, {"f", fg[0]}, {"g", fg[1]}, {"d'", de2[0]}, {"e'", de2[1]}});
        return make_match("P2o_8.1", T, odd, anchor({ob[0], ob[1], oc[0]}), l);
    }
    // P2o_9, P2o_10
    if (ix.deg[b0] == 2 && ix.deg[c0] == 2) {
        if (bc == 1) {
            const int d = only(both[0] & ~bcp);
            return make_match(ix.deg[d] == 1 ? "P2o_9.1" : "P2o_9.2", T, odd, anchor({both[0]}),
                              {{"a", a}, {"b", b0}, {"c", c0}, {"d", d}});
        }
        const auto ob = own_clauses(ix, b0, c0), oc = own_clauses(ix, c0, b0);
        const auto de = rest2(ob.at(0), bit(b0));
        return make_match("P2o_10", T, odd, anchor({ob[0], oc.at(0)}),
                          {{"a", a}, {"b", b0}, {"c", c0}, {"d", de[0]}, {"e", de[1]}});
    }
    return std::nullopt;
}

inline Match props_t2d(const ClauseIndex& ix, bool odd) {
    const auto T = FormulaType::T2d;
    const VarSet e1 = ix.twos[0], e2 = ix.twos[1];
    const int p = lowest(e1), q = other_end(e1, p), r = lowest(e2), s = other_end(e2, r);
    // (a,b,c,d) relabelings preserving {a,b},{c,d} as the 2-clauses
    std::vector<std::array<int, 4>> orients;
    for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}})
        for (auto [z, w] : {std::pair{r, s}, std::pair{s, r}}) {
            orients.push_back({x, y, z, w});
            orients.push_back({z, w, x, y});
        }
    std::sort(orients.begin(), orients.end());
    const std::vector<VarSet> base = {e1, e2};
    auto anchor = [&](std::initializer_list<VarSet> more) {
        auto v = base;
        v.insert(v.end(), more);
        return v;
    };
    auto abcd = [](const std::array<int, 4>& o) -> Letters {
        return {{"a", o[0]}, {"b", o[1]}, {"c", o[2]}, {"d", o[3]}};
    };
    // P2d_1
    for (auto o : orients) {
        const int a = o[0];
        if (ix.deg[a] < 3) continue;
        auto cs = ix.with(bit(a), bit(o[1]));
        const VarSet ef = cs[0] & ~bit(a), gh = cs[1] & ~bit(a);
        const VarSet common = ef & gh & (bit(o[2]) | bit(o[3]));
        if (common && lowest(common) != o[3]) continue; // the relabeling with the common variable as d comes later
        auto l = abcd(o);
        if (common) {
            const int d = o[3];
            l.insert(l.end(), {{"e", d}, {"f", other_end(ef, d)}, {"g", d}, {"h", other_end(gh, d)}});
            return make_match("P2d_1.2", T, odd, anchor({cs[0], cs[1]}), l);
        }
        const auto x = rest2(ef, 0), y = rest2(gh, 0);
        l.insert(l.end(), {{"e", x[0]}, {"f", x[1]}, {"g", y[0]}, {"h", y[1]}});
        return make_match("P2d_1.1", T, odd, anchor({cs[0], cs[1]}), l);
    }
    // P2d_2
    for (auto o : orients) {
        const auto cs = ix.with(bit(o[0]) | bit(o[2]));
        if (cs.empty()) continue;
        auto l = abcd(o);
        l.push_back({"e", only(cs[0] & ~(bit(o[0]) | bit(o[2])))});
        return make_match("P2d_2", T, odd, anchor({cs[0]}), l);
    }
    // P2d_3
    {
        const VarSet abcd_set = e1 | e2;
        for (std::size_t i = 0; i < ix.threes.size(); ++i)
            for (std::size_t j = i + 1; j < ix.threes.size(); ++j) {
                const VarSet x = ix.threes[i], y = ix.threes[j];
                const VarSet ef = x & y;
                if (set_size(ef) != 2 || (ef & abcd_set)) continue;
                const int g = only(x & ~ef), h = only(y & ~ef);
                if (!(abcd_set & bit(g)) || !(abcd_set & bit(h))) continue;
                const bool same = ((e1 & bit(g)) && (e1 & bit(h))) || ((e2 & bit(g)) && (e2 & bit(h)));
                const int e = lowest(ef), f = other_end(ef, e);
                for (auto o : orients) {
                    if (o[0] != g) continue;
                    if (same ? o[1] != h : o[2] != h) continue;
                    auto l = abcd(o);
                    l.insert(l.end(), {{"e", e}, {"f", f}, {"g", g}, {"h", h}});
                    if (!same) return make_match("P2d_3.1", T, odd, anchor({x, y}), l);
                    const bool lone = ix.deg[e] == 2 || ix.deg[f] == 2;
                    return make_match(lone ? "P2d_3.2" : "P2d_3.3", T, odd, anchor({x, y}), l);
                }
            }
    }
    // P2d_4
    for (auto o : orients)
        if (ix.deg[o[0]] == 1) return make_match("P2d_4", T, odd, base, abcd(o));
    // P2d_5
    for (auto o : orients) {
        for (VarSet x : ix.with(bit(o[0]), bit(o[1])))
            for (VarSet y : ix.with(bit(o[1]), bit(o[0]))) {
                if (set_size(x) != 3 || set_size(y) != 3) continue;
                if ((x & ~bit(o[0])) == (y & ~bit(o[1]))) continue;
                auto l = abcd(o);
                const auto ef = rest2(x, bit(o[0])), gh = rest2(y, bit(o[1]));
                l.insert(l.end(), {{"e", ef[0]}, {"f", ef[1]}, {"g", gh[0]}, {"h", gh[1]}});
                return make_match("P2d_5", T, odd, anchor({x, y}), l);
            }
    }
    return std::nullopt;
}

inline Match props_t3(const ClauseIndex& ix, bool odd) {
    const auto T = FormulaType::T3;
    const auto& tw = ix.twos;
    const std::vector<VarSet> base = tw;
    auto anchor = [&](std::initializer_list<VarSet> more) {
        auto v = base;
        v.insert(v.end(), more);
        return v;
    };
    // extra clauses: everything outside the three 2-clauses
    auto extra_deg = [&](int v) { return ix.deg[v] - ix.deg2[v]; };

    // Path a-b-c-d.
    if (auto path = find_path_or_cycle(ix, 3, false)) {
        auto v = path->vars;
        if (ix.deg[v[1]] != 2 && ix.deg[v[2]] == 2) std::reverse(v.begin(), v.end());
        Letters l = {{"a", v[0]}, {"b", v[1]}, {"c", v[2]}, {"d", v[3]}};
        return make_match(ix.deg[v[1]] == 2 ? "P3p_1" : "P3p_2", T, odd, base, l);
    }
    // Triangle a-b-c.
    if (auto tri = find_path_or_cycle(ix, 3, true)) {
        const auto v = tri->vars;
        for (int k = 0; k < 3; ++k)
            if (extra_deg(v[k]) == 0)
                return make_match("P3t_1", T, odd, base,
                                  {{"a", v[k]}, {"b", v[(k + 1) % 3]}, {"c", v[(k + 2) % 3]}});
        for (int k = 0; k < 3; ++k)
            if (extra_deg(v[k]) == 1) {
                const VarSet cl = ix.with(bit(v[k]), bit(v[(k + 1) % 3]) | bit(v[(k + 2) % 3])).at(0);
                const auto de = rest2(cl, bit(v[k]));
                return make_match("P3t_2", T, odd, anchor({cl}),
                                  {{"a", v[k]}, {"b", v[(k + 1) % 3]}, {"c", v[(k + 2) % 3]}, {"d", de[0]},
                                   {"e", de[1]}});
            }
        return make_match("P3t_3", T, odd, base, {{"a", v[0]}, {"b", v[1]}, {"c", v[2]}});
    }
    // One 2-clause disjoint from the other two.
    struct Iso {
        int a, b;
        VarSet cd, ef;
    };
    std::vector<Iso> isos;
    for (int k = 0; k < 3; ++k) {
        const VarSet ab = tw[k], cd = tw[(k + 1) % 3], ef = tw[(k + 2) % 3];
        if ((ab & cd) || (ab & ef)) continue;
        isos.push_back({lowest(ab), other_end(ab, lowest(ab)), std::min(cd, ef), std::max(cd, ef)});
    }
    auto orient_ab = [](const Iso& s) { return std::array<std::pair<int, int>, 2>{{{s.a, s.b}, {s.b, s.a}}}; };
    auto cdef_letters = [](const Iso& s) -> Letters {
        const VarSet shared = s.cd & s.ef;
        if (shared) {
            const int c = lowest(shared);
            return {{"c", c}, {"d", other_end(s.cd, c)}, {"e", other_end(s.ef, c)}, {"f", c}};
        }
        return {{"c", lowest(s.cd)}, {"d", other_end(s.cd, lowest(s.cd))}, {"e", lowest(s.ef)},
                {"f", other_end(s.ef, lowest(s.ef))}};
    };
    auto letters = [&](int a, int b, const Iso& s) {
        Letters l = {{"a", a}, {"b", b}};
        for (auto& x : cdef_letters(s)) l.push_back(x);
        return l;
    };
    if (odd) {
        for (const auto& s : isos)
            if (s.cd & s.ef) return make_match("P3io_1", T, odd, base, letters(s.a, s.b, s));
        for (const auto& s : isos)
            for (auto [a, b] : orient_ab(s))
                if (ix.deg[a] == 1) return make_match("P3io_2", T, odd, base, letters(a, b, s));
        for (const auto& s : isos)
            for (auto [a, b] : orient_ab(s)) {
                const auto cs = ix.with(bit(a), bit(b));
                if (!cs.empty()) return make_match("P3io_3", T, odd, anchor({cs[0]}), letters(a, b, s));
            }
        return std::nullopt;
    }
    // ie_1
    for (const auto& s : isos)
        for (auto [a, b] : orient_ab(s))
            if (ix.deg[a] == 1) return make_match("P3ie_1", T, odd, base, letters(a, b, s));
    // ie_2, ie_3: a 3-clause {v_ab, w, x} with w among c..f
    for (bool in_both : {false, true})
        for (const auto& s : isos)
            for (auto [a, b] : orient_ab(s))
                for (VarSet cl : ix.with(bit(a), bit(b))) {
                    if (set_size(cl) != 3) continue;
                    for (int w : members(cl & (s.cd | s.ef))) {
                        const bool both = (s.cd & bit(w)) && (s.ef & bit(w));
                        if (both != in_both) continue;
                        const int x = only(cl & ~(bit(a) | bit(w)));
                        if (x < 0) continue;
                        Letters l = {{"a", a}, {"b", b}, {"c", w}, {"x", x}};
                        if (in_both) {
                            l.push_back({"d", other_end(s.cd, w)});
                            l.push_back({"e", other_end(s.ef, w)});
                            return make_match("P3ie_3", T, odd, anchor({cl}), l);
                        }
                        const VarSet own = (s.cd & bit(w)) ? s.cd : s.ef;
                        l.push_back({"d", other_end(own, w)});
                        return make_match("P3ie_2", T, odd, anchor({cl}), l);
                    }
                }
    // ie_4
    for (const auto& s : isos) {
        if (set_size(s.cd | s.ef) != 3) continue;
        for (auto [a, b] : orient_ab(s))
            for (VarSet cl : ix.with(bit(a), bit(b) | s.cd | s.ef))
                if (set_size(cl) == 3) return make_match("P3ie_4", T, odd, anchor({cl}), letters(a, b, s));
    }
    // ie_5, ie_6 need three disjoint 2-clauses
    const VarSet six = tw[0] | tw[1] | tw[2];
    if (set_size(six) == 6) {
        for (const auto& s : isos)
            for (auto [a, b] : orient_ab(s))
                for (VarSet x : ix.with(bit(a), six & ~bit(a))) {
                    if (set_size(x) != 3) continue;
                    for (VarSet cd : {s.cd, s.ef})
                        for (int c : members(cd))
                            for (VarSet y : ix.with(bit(c), six & ~bit(c))) {
                                if (set_size(y) != 3 || (x & ~bit(a)) == (y & ~bit(c))) continue;
                                return make_match("P3ie_5", T, odd, anchor({x, y}),
                                                  {{"a", a}, {"b", b}, {"c", c}, {"d", other_end(cd, c)}});
                            }
                }
        for (const auto& s : isos)
            for (auto [a, b] : orient_ab(s)) {
                std::vector<VarSet> cs;
                for (VarSet x : ix.with(bit(a), six & ~bit(a)))
                    if (set_size(x) == 3) cs.push_back(x);
                if (cs.size() >= 2) return make_match("P3ie_6", T, odd, anchor({cs[0], cs[1]}), letters(a, b, s));
            }
    }
    return std::nullopt;
}

inline Match props_t4(const ClauseIndex& ix, bool odd) {
    const auto T = FormulaType::T4;
    const auto& tw = ix.twos;
    bool intersect = false;
    for (std::size_t i = 0; i < tw.size(); ++i)
        for (std::size_t j = i + 1; j < tw.size(); ++j) intersect = intersect || (tw[i] & tw[j]);
    if (!intersect) {
        const int a = lowest(tw[0]);
        return make_match("P4_1", T, odd, {tw[0]}, {{"a", a}, {"b", other_end(tw[0], a)}});
    }
    for (int want : {2, 3})
        for (int a : members(ix.support)) {
            if (want == 2 ? ix.deg2[a] != 2 : ix.deg2[a] < 3) continue;
            std::vector<VarSet> es;
            for (VarSet e : tw)
                if (e & bit(a)) es.push_back(e);
            if (want == 2)
                return make_match("P4_2", T, odd, es,
                                  {{"a", a}, {"b", other_end(es[0], a)}, {"c", other_end(es[1], a)}});
            es.resize(3);
            return make_match("P4_3", T, odd, es,
                              {{"a", a}, {"b", other_end(es[0], a)}, {"c", other_end(es[1], a)},
                               {"d", other_end(es[2], a)}});
        }
    return std::nullopt;
}

} // namespace detail

// First property of the type's list that holds, or nullopt where the case
// analysis has a gap.
inline std::optional<PropertyMatch> try_find_property(const MonotoneCnf& f, FormulaType type, bool odd_s) {
    const detail::ClauseIndex ix(f.clauses);
    for (VarSet c : f.clauses)
        if (set_size(c) < 2) throw Error(Errc::TypeMismatch, "unit or empty clause; propagate units first");
    if (formula_type(f) != type)
        throw Error(Errc::TypeMismatch, std::string("formula has type ") + type_name(formula_type(f)) + ", not " +
                                            type_name(type));
    switch (type) {
    case FormulaType::T0: return detail::props_t0(ix, odd_s);
    case FormulaType::T1: return detail::props_t1(ix, odd_s);
    case FormulaType::T2o:
        // a star of three 2-clauses
        if (ix.twos.size() >= 3) return detail::props_t4(ix, odd_s);
        return detail::props_t2o(ix, odd_s);
    case FormulaType::T2d: return detail::props_t2d(ix, odd_s);
    case FormulaType::T3: return detail::props_t3(ix, odd_s);
    case FormulaType::T4: return detail::props_t4(ix, odd_s);
    }
    return std::nullopt;
}

inline PropertyMatch find_property(const MonotoneCnf& f, FormulaType type, bool odd_s) {
    if (auto m = try_find_property(f, type, odd_s)) return *m;
    throw Error(Errc::NoPropertyFound, std::string("no property for type ") + type_name(type) +
                                           (odd_s ? ", odd s" : ", even s"));
}

// Parity from s = 3*tau - |universe|.
inline PropertyMatch find_property(const MonotoneCnf& f, FormulaType type) {
    const int s = 3 * transversal_number(f) - f.num_vars();
    return find_property(f, type, (s % 2) != 0);
}

} // namespace tlab
